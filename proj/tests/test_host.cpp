#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "snark/error.hpp"
#include "snark/host.hpp"

using namespace snark;

TEST_CASE("edge counts") {
  CHECK(HostSpec::complete(37).edge_count() == 666);
  HostSpec h = parse_host("multipartite mod 3 over 0..179 tail 180..194 join 2");
  CHECK(h.part_sizes() == std::vector<std::size_t>{60, 60, 75});
  CHECK(h.edge_count() == 12600);
  HostSpec l = parse_host("multipartite mod 3 over 0..65 tail 66..120");
  CHECK(l.part_sizes() == std::vector<std::size_t>{22, 22, 22, 55});
  CHECK_FALSE(l.is_host_edge(0, 3));
  CHECK(l.is_host_edge(0, 1));
  CHECK(l.name() == "K_{22,22,22,55}");
}

TEST_CASE("expected copies") {
  CHECK(expected_copies(HostSpec::complete(37), 18) == 37);
  HostSpec l = parse_host("multipartite mod 3 over 0..65 tail 66..120");
  CHECK(oracle::host_edges_by_enumeration(l) == 5082);
  CHECK(expected_copies(l, 33) == 154);
  // n r (n(r-1) + 2m) / 2e with n=22, r=3, m=55.
  CHECK(22 * 3 * (22 * 2 + 2 * 55) / (2 * 33) == 154);
  CHECK_THROWS_AS(expected_copies(HostSpec::complete(28), 33), InadmissibleError);
}

TEST_CASE("edge count agrees with enumeration on random hosts") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    HostSpec h;
    switch (rng() % 3) {
      case 0: h = HostSpec::complete(1 + rng() % 60); break;
      case 1: {
        std::vector<std::size_t> sizes(2 + rng() % 5);
        for (auto& s : sizes) s = 1 + rng() % 15;
        h = HostSpec::multipartite(sizes);
        break;
      }
      default: {
        std::size_t r = 2 + rng() % 4;
        std::size_t span = r * (1 + rng() % 10);
        HostSpec::ResidueMod m{r, span, std::nullopt, std::nullopt};
        if (rng() % 2) m.tail = std::make_pair(static_cast<Vertex>(span), static_cast<Vertex>(span + rng() % 9));
        h = HostSpec(m);
      }
    }
    CAPTURE(render_host(h));
    CHECK(h.edge_count() == oracle::host_edges_by_enumeration(h));
  }
}

TEST_CASE("host grammar round trip") {
  for (const char* text : {"complete 37", "multipartite mod 4 over 0..43",
                           "multipartite mod 6 over 0..131 tail 132..186",
                           "multipartite mod 3 over 0..179 tail 180..194 join 2",
                           "multipartite parts 0..5 | 6..11 step 2 7..11 step 2"}) {
    CHECK(render_host(parse_host(text)) == text);
  }
  CHECK(parse_host("multipartite parts 0..5 | 6..11 step 2 7..11 step 2").part_sizes() ==
        std::vector<std::size_t>{6, 6});
  CHECK_THROWS_AS(parse_host("multipartite parts 0..5 | 3..8"), ConfigError);
  CHECK_THROWS_AS(parse_host("triangle 3"), ConfigError);
}

TEST_CASE("admissible residues reproduce the divisibility table") {
  struct Row {
    int v, modulus;
    std::vector<int> residues;
  };
  const std::vector<Row> rows = {{10, 15, {1, 10}},           {12, 36, {1, 28}},
                                 {18, 27, {1}},               {20, 60, {1, 16, 25, 40}},
                                 {22, 33, {1, 22}},           {24, 72, {1, 64}},
                                 {26, 39, {1, 13}},           {28, 84, {1, 28, 49, 64}},
                                 {30, 45, {1, 10}},           {34, 51, {1, 34}},
                                 {36, 108, {1, 28}},          {40, 120, {1, 16, 25, 40}},
                                 {50, 75, {1, 25}}};
  for (const auto& row : rows) {
    CAPTURE(row.v);
    Admissibility a = admissible_residues(row.v);
    CHECK(a.modulus == row.modulus);
    CHECK(a.residues == row.residues);
  }
  CHECK(format_admissibility(admissible_residues(22)) == "n ≡ 1, 22 (mod 33)");
  CHECK(format_admissibility(admissible_residues(40), {16, 25}) ==
        "n ≡ 1, 16, 25, 40 (mod 120), n ≠ 16, 25");
  CHECK_THROWS_AS(admissible_residues(11), Error);
}

TEST_CASE("admissible orders") {
  auto spectrum = known_spectrum(20);
  CHECK(is_admissible_order(20, 1, spectrum));
  CHECK_FALSE(is_admissible_order(20, 16, spectrum));
  CHECK(is_admissible_order(20, 25, spectrum));
  CHECK_FALSE(is_admissible_order(12, 30, known_spectrum(12)));
  CHECK(is_admissible_order(12, 109, known_spectrum(12)));
  CHECK(is_admissible_order(22, 22, known_spectrum(22)));
  CHECK_FALSE(is_admissible_order(22, 23, known_spectrum(22)));
  CHECK_FALSE(is_admissible_order(22, 13, known_spectrum(22)));
}
