#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "snark/construct.hpp"
#include "snark/corpus.hpp"
#include "snark/error.hpp"

using namespace snark;

namespace {

const Decomposition& corpus_entry(const std::string& graph, const std::string& host) {
  for (const auto& d : builtin_corpus()) {
    if (d.graph == graph && d.host.name() == host) return d;
  }
  FAIL("no corpus entry " << graph << " " << host);
  throw 0;
}

std::uint64_t copies(const Decomposition& d) { return explicit_copies(d).size(); }

bool pairwise_ok(const Decomposition& d) {
  return oracle::decomposes_pairwise(d.host, builtin_catalog().at(d.graph).graph, explicit_copies(d));
}

}  // namespace

TEST_CASE("wilson fill: Tietze 109 from 2^3") {
  const auto& cat = builtin_catalog();
  IngredientSet ing;
  ing.designs.emplace(37, corpus_entry("TIETZE", "K_37"));
  auto k18 = build_filler_by_inflation(corpus_entry("TIETZE", "K_{6,6,6}"), 3, cat);
  CHECK(k18.host.name() == "K_{18,18,18}");
  CHECK(verify(k18, cat).pass);
  ing.fillers.emplace(std::vector<std::size_t>{18, 18, 18}, k18);
  auto d = wilson_fill(gdd_from_latin_squares(3, 2), {18, 18, 18}, "TIETZE", ing, true, true, cat);
  CHECK(d.host.name() == "K_109");
  CHECK(d.infinity);
  CHECK(copies(d) == 327);
  // Additivity: three group designs plus four block fillers.
  CHECK(copies(d) == 3 * copies(ing.designs.at(37)) + 4 * copies(k18));
  CHECK(copies(d) == expected_copies(d.host, 18));
  CHECK(pairwise_ok(d));
}

TEST_CASE("wilson fill: B11 163 from 6^3") {
  const auto& cat = builtin_catalog();
  IngredientSet ing;
  ing.designs.emplace(55, corpus_entry("B11", "K_55"));
  ing.fillers.emplace(std::vector<std::size_t>{9, 9, 9}, corpus_entry("B11", "K_{9,9,9}"));
  auto d = wilson_fill(gdd_from_latin_squares(3, 6), {9, 9, 9}, "B11", ing, true, true, cat);
  CHECK(d.host.name() == "K_163");
  CHECK(copies(d) == 489);
  CHECK(verify(d, cat).pass);
}

TEST_CASE("wilson fill: L1 100 from 1^3") {
  const auto& cat = builtin_catalog();
  IngredientSet ing;
  ing.designs.emplace(34, corpus_entry("L1", "K_34"));
  ing.fillers.emplace(std::vector<std::size_t>{33, 33, 33}, corpus_entry("L1", "K_{33,33,33}"));
  auto d = wilson_fill(gdd_from_latin_squares(3, 1), {33, 33, 33}, "L1", ing, true, true, cat);
  CHECK(copies(d) == 150);
  CHECK(pairwise_ok(d));
}

TEST_CASE("wilson fill reports the missing ingredient") {
  const auto& cat = builtin_catalog();
  IngredientSet ing;
  ing.fillers.emplace(std::vector<std::size_t>{9, 9, 9}, corpus_entry("B11", "K_{9,9,9}"));
  CHECK_THROWS_WITH_AS(wilson_fill(gdd_from_latin_squares(3, 6), {9, 9, 9}, "B11", ing, true, true, cat),
                       "missing K_55 design", ConfigError);
  IngredientSet only_design;
  only_design.designs.emplace(55, corpus_entry("B11", "K_55"));
  CHECK_THROWS_WITH_AS(wilson_fill(gdd_from_latin_squares(3, 6), {9, 9, 9}, "B11", only_design, true, true, cat),
                       "missing K_{9,9,9} filler", ConfigError);
}

TEST_CASE("fill parts: L1 121 and 187") {
  const auto& cat = builtin_catalog();
  IngredientSet ing;
  ing.designs.emplace(22, corpus_entry("L1", "K_22"));
  ing.designs.emplace(55, corpus_entry("L1", "K_55"));
  auto d = fill_parts(corpus_entry("L1", "K_{22,22,22,55}"), ing, cat);
  CHECK(d.host.name() == "K_121");
  CHECK(copies(d) == 220);
  CHECK(pairwise_ok(d));
  auto big = fill_parts(corpus_entry("L1", "K_{22,22,22,22,22,22,55}"), ing, cat);
  CHECK(big.host.name() == "K_187");
  CHECK(copies(big) == 187 * 186 / 66);
  CHECK(verify(big, cat).pass);
  CHECK_THROWS_AS(fill_parts(corpus_entry("L1", "K_22"), ing, cat), ConfigError);
  IngredientSet missing;
  missing.designs.emplace(22, corpus_entry("L1", "K_22"));
  CHECK_THROWS_AS(fill_parts(corpus_entry("L1", "K_{22,22,22,55}"), missing, cat), ConfigError);
}

TEST_CASE("augment common point: GS3 208") {
  const auto& cat = builtin_catalog();
  IngredientSet ing;
  ing.designs.emplace(73, corpus_entry("GS3", "K_73"));
  ing.designs.emplace(64, corpus_entry("GS3", "K_64"));
  auto d = augment_common_point(corpus_entry("GS3", "K_{72,72,63}"), ing, cat);
  CHECK(d.host.name() == "K_208");
  CHECK(d.infinity);
  CHECK(copies(d) == 208 * 207 / 72);
  CHECK(verify(d, cat).pass);

  IngredientSet none;
  none.designs.emplace(10, corpus_entry("B11", "K_28"));
  CHECK_THROWS_AS(augment_common_point(corpus_entry("B11", "K_{9,9,9}"), none, cat), ConfigError);
}

TEST_CASE("inflated tripartite fillers verify") {
  const auto& cat = builtin_catalog();
  auto t = build_filler_by_inflation(corpus_entry("TIETZE", "K_{6,6,6}"), 3, cat);
  CHECK(verify(t, cat).pass);
  auto b = build_filler_by_inflation(corpus_entry("B11", "K_{9,9,9}"), 3, cat);
  CHECK(b.host.name() == "K_{27,27,27}");
  CHECK(verify(b, cat).pass);
  auto l = build_filler_by_inflation(corpus_entry("L1", "K_{33,33,33}"), 3, cat);
  CHECK(l.host.name() == "K_{99,99,99}");
  CHECK(copies(l) == 9 * copies(corpus_entry("L1", "K_{33,33,33}")));
  CHECK(verify(l, cat).pass);
  auto g = build_filler_by_inflation(corpus_entry("GS3", "K_{12,12,12}"), 2, cat);
  CHECK(g.host.name() == "K_{24,24,24}");
  CHECK(pairwise_ok(g));
}

TEST_CASE("plans follow the recipe table") {
  const auto& cat = builtin_catalog();
  auto plan = [&](const char* g, std::uint64_t n) { return describe(plan_for(cat.at(g), n)); };
  CHECK(plan("TIETZE", 109) == "3-GDD 2^3, weights 18, plus infinity");
  CHECK(plan("TIETZE", 37) == "ingredient design");
  CHECK(plan("TIETZE", 397) == "3-GDD 6^3 4^1, weights 18 18, plus infinity");
  CHECK(plan("B11", 163) == "3-GDD 6^3, weights 9, plus infinity");
  CHECK(plan("B11", 190) == "3-GDD 3^7, weights 9, plus infinity");
  CHECK(plan("L1", 100) == "3-GDD 1^3, weights 33, plus infinity");
  CHECK(plan("L1", 133) == "4-GDD 3^4, weights 11, plus infinity");
  CHECK(plan("L1", 121) == "fill parts of K_{22,22,22,55}");
  CHECK(plan("L1", 154) == "4-GDD 2^7, weights 11");
  CHECK(plan("GS3", 208) == "augment with a common point K_{72,72,63}");
  CHECK(plan("GS3", 280) == "4-GDD 3^3 3^1, weights 24 21, plus infinity");
  CHECK(plan("FJ7", 112) == "4-GDD 4^4, weights 7");
  CHECK(plan("GS5", 160) == "fill parts of K_{40,40,40,40}");
  CHECK(plan("S1", 340) == "4-GDD 4^6 10^1, weights 10 10");
  CHECK(plan("S1", 100).rfind("external", 0) == 0);
  CHECK(plan("TIETZE", 136).rfind("external", 0) == 0);
  CHECK_THROWS_AS(plan_for(cat.at("TIETZE"), 30), InadmissibleError);
  CHECK_THROWS_AS(plan_for(cat.at("S1"), 16), InadmissibleError);
}

TEST_CASE("every plan accounts for every edge") {
  // Edge count of the assembled host equals that of the plan's pieces.
  const auto& cat = builtin_catalog();
  for (const auto& g : cat.graphs()) {
    const std::uint64_t v = g.v(), e = g.e();
    for (std::uint64_t n = v; n < 2000; ++n) {
      if (!is_admissible_order(static_cast<int>(v), n, g.spectrum)) continue;
      Plan p = plan_for(g, n);
      if (p.kind != PlanKind::Wilson) continue;
      CAPTURE(g.name);
      CAPTURE(n);
      std::uint64_t total = p.infinity ? 1 : 0, inside = 0, points = 0;
      std::vector<std::uint64_t> sizes;
      for (std::size_t c = 0; c < p.gdd.classes.size(); ++c) {
        auto [size, count] = p.gdd.classes[c];
        total += size * count * p.weights[c];
        points += size * count;
        const std::uint64_t m = size * p.weights[c] + (p.infinity ? 1 : 0);
        inside += count * m * (m - 1) / 2;
        CHECK((m <= 1 || (m * (m - 1) / 2) % e == 0));
      }
      CHECK(total == n);
      CHECK(points >= p.gdd.k);
      // Cross edges are covered by block fillers.
      CHECK((n * (n - 1) / 2 - inside) % e == 0);
    }
  }
}

TEST_CASE("construct end to end") {
  auto t = construct("TIETZE", 109);
  CHECK(t.id == "tietze.K109");
  CHECK(copies(t) == 327);
  CHECK(t.actions.size() == 1);
  CHECK(t.actions[0].identity);

  auto pass = construct("TIETZE", 37);
  CHECK(copies(pass) == 37);

  auto l = construct("L1", 121);
  CHECK(copies(l) == 220);

  auto f = construct("FJ7", 112);
  CHECK(copies(f) == 112 * 111 / 84);
  CHECK(verify(f, builtin_catalog()).pass);

  CHECK(construct("TIETZE", 1).blocks.empty());
  CHECK_THROWS_AS(construct("TIETZE", 30), InadmissibleError);
  CHECK_THROWS_AS(construct("TIETZE", 136), UnreachableError);
  CHECK_THROWS_AS(construct("NOPE", 37), ConfigError);
}

TEST_CASE("construct reports what is missing") {
  std::string message;
  try {
    construct("S1", 340);
  } catch (const UnreachableError& e) {
    message = e.what();
  }
  CHECK(message.find("unreachable") == 0);
  CHECK(message.find("K_100") != std::string::npos);
}

TEST_CASE("construct output is reproducible") {
  CHECK(render_entry(construct("B11", 163)) == render_entry(construct("B11", 163)));
}

TEST_CASE("construct filler") {
  auto f = construct_filler("TIETZE", {18, 18, 18});
  CHECK(f.host.name() == "K_{18,18,18}");
  CHECK(verify(f, builtin_catalog()).pass);
  CHECK_THROWS_AS(construct_filler("TIETZE", {5, 5, 5}), UnreachableError);
  CHECK_THROWS_AS(construct_filler("TIETZE", {6}), ConfigError);
}

TEST_CASE("relabeling is injective per ingredient") {
  auto d = construct("B12", 163);
  std::set<std::vector<Vertex>> seen;
  for (const auto& b : d.blocks) {
    std::set<Vertex> distinct(b.tuple.begin(), b.tuple.end());
    CHECK(distinct.size() == b.tuple.size());
    seen.insert(b.tuple);
  }
  CHECK(seen.size() == d.blocks.size());
}
