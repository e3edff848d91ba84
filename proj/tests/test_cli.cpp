#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "snark/cli.hpp"
#include "snark/construct.hpp"
#include "snark/corpus.hpp"

using namespace snark;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::size_t lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST_CASE("admissible prints the residue classes") {
  auto r = run({"admissible", "22"});
  CHECK(r.code == cli::kOk);
  CHECK(r.out == "n ≡ 1, 22 (mod 33)\n");
  auto j = run({"admissible", "22", "--json"});
  CHECK(j.out.find("\"modulus\":33") != std::string::npos);
  CHECK(run({"admissible", "11"}).code == cli::kUsage);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == cli::kUsage);
  CHECK(run({"bogus"}).code == cli::kUsage);
  CHECK(run({"construct", "TIETZE"}).code == cli::kUsage);
  CHECK(run({"construct", "NOPE", "37"}).code == cli::kUsage);
  CHECK(run({"--help"}).code == cli::kOk);
  CHECK(run({"--config", "/nonexistent.json", "admissible", "22"}).code == cli::kUsage);
}

TEST_CASE("verify the shipped corpus directory") {
  auto r = run({"verify", SNARK_SOURCE_DIR "/corpus"});
  CHECK(r.code == cli::kOk);
  CHECK(lines(r.out) == builtin_corpus().size());
  CHECK(r.out.find("entry=tietze.K37 status=pass copies=37 violations=0\n") != std::string::npos);
  auto j = run({"verify", "--json", SNARK_SOURCE_DIR "/corpus/tietze.design"});
  CHECK(j.code == cli::kOk);
  CHECK(j.out.rfind("{\"copies\":", 0) == 0);
}

TEST_CASE("verify reports failures and configuration errors") {
  namespace fs = std::filesystem;
  auto dir = fs::temp_directory_path() / "snark_cli_test";
  fs::create_directories(dir);
  {
    std::ofstream(dir / "bad.design") << "entry bad\nhost complete 4\naction a identity\nend\n"
                                      << "entry broken\ngraph TIETZE\nhost complete 37\nend\n";
    std::ofstream(dir / "syntax.design") << "entry x\nhost nonsense\n";
  }
  auto f = run({"verify", (dir / "bad.design").string()});
  CHECK(f.code != cli::kOk);
  CHECK(run({"verify", (dir / "syntax.design").string()}).code == cli::kUsage);

  std::string tampered = render_entry(builtin_corpus().front());
  auto pos = tampered.find("block ");
  pos = tampered.find(' ', tampered.find(' ', pos + 6) + 1) + 1;
  tampered.replace(pos, tampered.find(' ', pos) - pos, tampered.substr(pos, 1) == "0" ? "1" : "0");
  std::ofstream(dir / "tampered.design") << tampered;
  auto t = run({"verify", "--details", (dir / "tampered.design").string()});
  CHECK(t.code == cli::kVerifyFailed);
  CHECK(t.out.find("status=fail") != std::string::npos);
  fs::remove_all(dir);
}

TEST_CASE("construct matches the library and is stable") {
  auto r = run({"construct", "TIETZE", "109"});
  CHECK(r.code == cli::kOk);
  CHECK(r.out == render_entry(construct("TIETZE", 109)));
  CHECK(run({"construct", "TIETZE", "109"}).out == r.out);
  CHECK(run({"construct", "TIETZE", "30"}).code == cli::kUsage);
  CHECK(run({"construct", "TIETZE", "136"}).code == cli::kUnreachable);
  auto p = run({"construct", "TIETZE", "109", "--plan"});
  CHECK(p.out == "3-GDD 2^3, weights 18, plus infinity\n");
  auto j = run({"construct", "L1", "100", "--json"});
  CHECK(j.out.find("\"copies\":150") != std::string::npos);
}

TEST_CASE("search via the command line") {
  auto r = run({"search", "TIETZE", "--host", "complete 37", "--action", "shift 1 mod 37 on 0..36", "--blocks", "1",
                "--seeds", "8", "--jobs", "1"});
  CHECK(r.code == cli::kOk);
  auto parsed = parse_corpus(r.out, "out", builtin_catalog());
  REQUIRE(parsed.size() == 1);
  CHECK(parsed[0].id == "tietze.K37");
  CHECK(verify(parsed[0], builtin_catalog()).pass);
  CHECK(run({"search", "TIETZE", "--host", "complete 37", "--action", "shift 1 mod 37 on 0..36", "--blocks", "1",
             "--seeds", "8", "--jobs", "3"})
            .out == r.out);

  auto none = run({"search", "TIETZE", "--host", "complete 28", "--action", "shift 4 mod 28 on 0..27", "--blocks",
                   "3", "--max-steps", "10"});
  CHECK(none.code == cli::kUnreachable);
  CHECK(run({"search", "TIETZE", "--host", "complete 30", "--action", "shift 1 mod 30 on 0..29", "--blocks", "1"})
            .code == cli::kUsage);
  CHECK(run({"search", "TIETZE", "--host", "complete 28"}).code == cli::kUsage);

  auto s = run({"search", "GS5", "--host", "complete 40", "--suggest"});
  CHECK(s.out.find("blocks=1 action=\"fix INF shift 3 mod 39 on 0..38\"") != std::string::npos);
}

TEST_CASE("catalog and gdd") {
  auto c = run({"catalog", "--check"});
  CHECK(c.code == cli::kOk);
  CHECK(c.out.find("3-edge-colorable=yes") == std::string::npos);
  CHECK(run({"catalog", "TIETZE", "--json"}).out.find("\"v\":12") != std::string::npos);
  auto g = run({"gdd", "4^4", "-k", "3"});
  CHECK(g.code == cli::kOk);
  CHECK(g.out.rfind("gdd type 4^4 k=3\n", 0) == 0);
  CHECK(run({"gdd", "2^2", "-k", "3"}).code == cli::kUnreachable);
  CHECK(run({"gdd", "2^x"}).code == cli::kUsage);
}

TEST_CASE("config file supplies defaults") {
  namespace fs = std::filesystem;
  auto path = fs::temp_directory_path() / "snark_cli_config.json";
  std::ofstream(path) << R"({"jobs": 1, "search": {"max_steps": 10}})";
  auto r = run({"--config", path.string(), "search", "TIETZE", "--host", "complete 28", "--action",
                "shift 4 mod 28 on 0..27", "--blocks", "3", "--json"});
  CHECK(r.code == cli::kUnreachable);
  CHECK(r.out.find("\"steps\":10") != std::string::npos);
  std::ofstream(path) << "{ not json";
  CHECK(run({"--config", path.string(), "admissible", "22"}).code == cli::kUsage);
  fs::remove(path);
}
