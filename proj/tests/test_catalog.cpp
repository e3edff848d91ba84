#include <doctest.h>

#include <map>

#include "snark/catalog.hpp"
#include "snark/error.hpp"

using namespace snark;

TEST_CASE("catalog contents") {
  const Catalog& cat = builtin_catalog();
  CHECK(cat.graphs().size() == 42);
  const CatalogGraph& t = cat.at("TIETZE");
  CHECK(t.v() == 12);
  CHECK(t.e() == 18);
  int loupekine = 0;
  for (int i = 1; i <= 20; ++i) {
    const CatalogGraph* g = cat.find("L" + std::to_string(i));
    REQUIRE(g);
    CHECK(g->v() == 22);
    ++loupekine;
  }
  CHECK(loupekine == 20);
  for (int i = 1; i <= 6; ++i) CHECK(cat.at("S" + std::to_string(i)).v() == 20);
  CHECK(cat.find("NOPE") == nullptr);
  CHECK_THROWS_AS(cat.at("NOPE"), ConfigError);
}

TEST_CASE("edge counts follow from 3-regularity") {
  const std::map<std::size_t, std::size_t> expected = {{12, 18}, {18, 27}, {20, 30}, {22, 33},
                                                      {24, 36}, {26, 39}, {28, 42}, {30, 45},
                                                      {34, 51}, {36, 54}, {40, 60}, {50, 75}};
  for (const auto& g : builtin_catalog().graphs()) {
    CAPTURE(g.name);
    CHECK(g.e() * 2 == g.v() * 3);
    CHECK(expected.at(g.v()) == g.e());
  }
}

TEST_CASE("spectrum metadata includes exclusions") {
  const Catalog& cat = builtin_catalog();
  REQUIRE(cat.at("S1").spectrum);
  CHECK(cat.at("S1").spectrum->modulus == 60);
  CHECK(cat.at("S1").spectrum->excluded == std::vector<int>{16});
  CHECK(cat.at("GS5").spectrum->excluded == std::vector<int>{16, 25});
  CHECK(cat.at("TIETZE").spectrum->residues == std::vector<int>{1, 28});
}

TEST_CASE("graph file round trip") {
  for (const auto& g : builtin_catalog().graphs()) {
    std::string text = render_graph_file(g);
    CatalogGraph back = parse_graph_file(text, g.name);
    CHECK(back.name == g.name);
    CHECK(back.graph.edges() == g.graph.edges());
    CHECK(render_graph_file(back) == text);
  }
}

TEST_CASE("graph file diagnostics carry line numbers") {
  try {
    parse_graph_file("graph X v=3\nedge 1 2\nedge 1 4\n", "x.graph");
    FAIL("expected a parse error");
  } catch (const ParseError& err) {
    CHECK(err.line() == 3);
  }
  CHECK_THROWS_AS(parse_graph_file("edge 1 2\n", "x"), ParseError);
  CHECK_THROWS_AS(parse_graph_file("graph X v=3\nedge 1 2\nedge 2 1\n", "x"), ParseError);
  CatalogGraph g = parse_graph_file("# comment\ngraph P v=2\nedge 1 2  # trailing\n", "x");
  CHECK(g.e() == 1);
}
