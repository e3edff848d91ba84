#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "snark/graph.hpp"

namespace snark {

// g1^t1 g2^t2 ... with block size k. Group classes keep their listed order.
struct GddType {
  std::vector<std::pair<std::size_t, std::size_t>> classes;  // (group size, count)
  std::size_t k = 3;

  std::size_t points() const;
  std::size_t group_count() const;
  // Group sizes in group order.
  std::vector<std::size_t> group_sizes() const;
  // "2^3 4^1"
  std::string to_string() const;

  friend bool operator==(const GddType&, const GddType&) = default;
};

// Parses "2^3 4^1".
GddType parse_gdd_type(std::string_view text, std::size_t k);
// Run-length encodes consecutive equal sizes.
GddType type_from_sizes(const std::vector<std::size_t>& sizes, std::size_t k);

struct Gdd {
  std::size_t k = 3;
  std::size_t points = 0;
  std::vector<std::vector<Vertex>> groups;
  std::vector<std::vector<Vertex>> blocks;

  GddType type() const;
};

enum class GddViolationKind { BadPartition, BadBlockSize, IntraGroupPair, UncoveredPair, RepeatedPair };

struct GddViolation {
  GddViolationKind kind;
  Vertex a = 0;
  Vertex b = 0;
  std::size_t count = 0;
};

struct GddReport {
  bool pass = false;
  std::vector<GddViolation> violations;
};

GddReport validate_gdd(const Gdd& g);

// Relabels points group by group and sorts blocks; group order is kept.
void canonicalize(Gdd& g);

// k-GDD of type g^k from k-2 MOLS of side g.
Gdd gdd_from_latin_squares(std::size_t k, std::size_t g);

// STS(n) as a 3-GDD of type 1^n; n = 1 or 3 (mod 6).
Gdd steiner_triple_system(std::size_t n);

enum class Deletion { Point, ParallelClassAsGroups };

// Point: drop the last point of an STS(n); its triples become groups,
// giving type 2^((n-1)/2). ParallelClassAsGroups: a parallel class of an
// STS(6t+3) becomes the groups, giving type 3^(2t+1).
Gdd gdd_by_deletion(const Gdd& sts, Deletion mode);

// Replaces each point by w points and each block by a copy of `filler`, a
// k-GDD of type w^k.
Gdd inflate_gdd(const Gdd& g, std::size_t w, const Gdd& filler);

struct GddSearchResult {
  std::optional<Gdd> gdd;
  std::string reason;
  std::uint64_t nodes = 0;
};

// Exact cover of all cross-group pairs by transversal k-sets. Types that
// fail the counting conditions are rejected without searching.
GddSearchResult solve_gdd_exact_cover(const GddType& t, std::uint64_t node_budget);

// `gdd type <type> k=<k>` / `group ...` / `block ...` / `end`.
std::vector<Gdd> parse_gdd_file(std::string_view text, const std::string& origin);
std::string render_gdd(const Gdd& g);

struct GddProviderOptions {
  std::vector<std::string> gdd_path;  // files or directories of *.gdd
  std::uint64_t node_budget = 2'000'000;
};

// Direct constructions, then inflation, then exact cover, then ingested
// files. The result is validated and canonical, with groups in type order.
// Throws UnreachableError listing every attempt.
Gdd gdd_provider(const GddType& t, const GddProviderOptions& options = {});

}  // namespace snark
