#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>

#include "snark/corpus.hpp"
#include "snark/error.hpp"

using namespace snark;

namespace {

const Decomposition* find_entry(const std::string& id) {
  for (const auto& d : builtin_corpus()) {
    if (d.id == id) return &d;
  }
  return nullptr;
}

}  // namespace

TEST_CASE("shipped corpus size and verification") {
  const auto& corpus = builtin_corpus();
  CHECK(corpus.size() >= 160);
  CorpusSummary s = verify_all(corpus, builtin_catalog());
  CHECK(s.all_passed());
  CHECK(s.passed == corpus.size());
}

TEST_CASE("Tietze K_37 entry parses") {
  const Decomposition* d = find_entry("tietze.K37");
  REQUIRE(d);
  REQUIRE(d->blocks.size() == 1);
  REQUIRE(d->actions.size() == 1);
  const ActionSpec& a = d->actions[0];
  REQUIRE(a.segments.size() == 1);
  CHECK(a.segments[0].step == 1);
  CHECK(a.segments[0].modulus == 37);
}

TEST_CASE("K_{60,60,75} entry carries the tail segment") {
  int seen = 0;
  for (const auto& d : builtin_corpus()) {
    if (d.host.part_sizes() != std::vector<std::size_t>{60, 60, 75}) continue;
    ++seen;
    const ActionSpec& a = d.actions.at(0);
    REQUIRE(a.segments.size() == 2);
    CHECK(a.segments[1] == Segment{180, 194, 1, 15});
  }
  CHECK(seen == 6);
}

TEST_CASE("mixed actions are per block") {
  const Decomposition* d = find_entry("tietze.K64");
  REQUIRE(d);
  CHECK(d->actions.size() == 2);
  CHECK(d->infinity);
  CHECK(d->blocks.front().action == "a");
  CHECK(d->blocks.back().action == "b");
}

TEST_CASE("coverage manifest") {
  std::set<std::pair<std::string, std::string>> have;
  for (const auto& d : builtin_corpus()) have.insert({d.graph, d.host.name()});
  auto require = [&](std::vector<std::string> graphs, std::vector<std::string> hosts) {
    for (const auto& g : graphs)
      for (const auto& h : hosts) {
        CAPTURE(g);
        CAPTURE(h);
        CHECK(have.count({g, h}) == 1);
      }
  };
  auto K = [](std::vector<int> orders) {
    std::vector<std::string> out;
    for (int n : orders) out.push_back("K_" + std::to_string(n));
    return out;
  };
  auto family = [](const std::string& prefix, int count) {
    std::vector<std::string> out;
    for (int i = 1; i <= count; ++i) out.push_back(prefix + std::to_string(i));
    return out;
  };
  const auto S = family("S", 6);
  const auto L = family("L", 20);
  require({"TIETZE"}, K({28, 37, 64, 73, 100}));
  require({"B11", "B12"}, K({28, 55, 109}));
  require(S, K({25, 40, 61, 76, 85, 121, 160, 181, 220}));
  require(L, K({22, 34, 55, 67, 88}));
  require({"GS3"}, K({64, 73, 136, 145}));
  require({"CS1", "CS2", "B21", "B22"}, K({40, 79}));
  require({"FJ7"}, K({28, 85, 169}));
  require({"DS"}, K({46, 91, 181}));
  require({"B31", "B32"}, K({52, 103}));
  require({"Z"}, K({109, 217}));
  require({"GS5"}, K({40, 121, 241}));
  require({"SZE", "WAT"}, K({76, 151}));

  require({"TIETZE"}, {"K_{6,6,6}", "K_{3,3,3,3}"});
  require({"B11", "B12"}, {"K_{9,9,9}"});
  require(S, {"K_{5,5,5,5}", "K_{10,10,10,10}", "K_{6,6,6,6,6}", "K_{60,60,75}", "K_{60,60,60,75}",
              "K_{15,15,15,21}", "K_{24,24,24,24,39}", "K_{24,24,24,24,24,24,60}"});
  require(L, {"K_{33,33,33}", "K_{11,11,11,11}", "K_{22,22,22,55}", "K_{22,22,22,22,22,22,55}"});
  require({"GS3"}, {"K_{12,12,12}", "K_{24,24,15}", "K_{72,72,63}", "K_{24,24,24,24}", "K_{24,24,24,21}"});
  require({"CS1", "CS2", "B21", "B22"}, {"K_{39,39,39}", "K_{13,13,13,13}"});
  require({"FJ7"}, {"K_{42,42,42}", "K_{7,7,7,7}"});
  require({"DS"}, {"K_{15,15,15}"});
  require({"B31", "B32"}, {"K_{51,51,51}", "K_{17,17,17,17}"});
  require({"Z"}, {"K_{18,18,18}"});
  require({"GS5"}, {"K_{60,60,60}", "K_{20,20,20,20}", "K_{40,40,40,40}"});
  require({"SZE", "WAT"}, {"K_{75,75,75}", "K_{25,25,25,25}"});
}

TEST_CASE("render then parse is the identity") {
  for (const auto& d : builtin_corpus()) {
    std::string text = render_entry(d);
    auto back = parse_corpus(text, d.id, builtin_catalog());
    REQUIRE(back.size() == 1);
    CHECK(render_entry(back[0]) == text);
    CHECK(back[0].blocks == d.blocks);
    CHECK(back[0].actions == d.actions);
    CHECK(back[0].host == d.host);
  }
}

TEST_CASE("shipped files round trip byte for byte") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::path(SNARK_SOURCE_DIR) / "corpus";
  for (const auto& de : fs::directory_iterator(dir)) {
    std::ifstream in(de.path());
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    auto entries = parse_corpus(text, de.path().string(), builtin_catalog());
    CHECK(render_corpus(entries) == text);
  }
}

TEST_CASE("parse diagnostics") {
  const std::string base = "entry x\nhost complete 28\naction a shift 4 mod 28 on 0..27\n";
  try {
    parse_corpus(base + "block TIETZE a 0 1 2 3 4 5 6 7 8 9 10\nend\n", "t", builtin_catalog());
    FAIL("expected parse error");
  } catch (const ParseError& err) {
    CHECK(err.line() == 4);
    CHECK(std::string(err.what()).find("tuple length 11 ≠ 12") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_corpus(base + "block NOPE a 0\nend\n", "t", builtin_catalog()), ParseError);
  CHECK_THROWS_AS(parse_corpus(base + "block TIETZE b 0 1 2 3 4 5 6 7 8 9 10 11\nend\n", "t", builtin_catalog()),
                  ParseError);
  CHECK_THROWS_AS(parse_corpus(base, "t", builtin_catalog()), ParseError);
  CHECK_THROWS_AS(parse_corpus("entry x\nhost complete 5\naction a shift 1 mod 4 on 0..3\ngraph TIETZE\nend\n",
                               "t", builtin_catalog()),
                  ParseError);
  CHECK(parse_corpus("", "empty", builtin_catalog()).empty());
  CHECK(parse_corpus("# nothing here\n\n", "empty", builtin_catalog()).empty());
}

TEST_CASE("identity actions and empty entries round trip") {
  const std::string text =
      "entry one\ngraph TIETZE\nhost complete 1\nend\n\n"
      "entry lit\nhost complete 13\naction id identity\nblock TIETZE id 0 1 2 3 4 5 6 7 8 9 10 INF\nend\n";
  auto entries = parse_corpus(text, "t", builtin_catalog());
  REQUIRE(entries.size() == 2);
  CHECK(entries[1].blocks[0].tuple.back() == 12);
  CHECK(render_corpus(entries) == text);
}
