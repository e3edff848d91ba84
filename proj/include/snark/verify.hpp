#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "snark/action.hpp"
#include "snark/catalog.hpp"
#include "snark/host.hpp"

namespace snark {

// Base blocks of one catalog graph, each developed under one of the listed
// actions, claimed to partition the edges of the host.
struct Decomposition {
  std::string id;
  std::string source;
  HostSpec host;
  std::string graph;
  std::vector<ActionSpec> actions;
  std::vector<BaseBlock> blocks;
  // The last host vertex is the point at infinity (rendered `INF`).
  bool infinity = false;

  const ActionSpec* find_action(std::string_view id) const;
};

enum class ViolationKind { NonHostEdge, CoverageDeficit, CoverageExcess, RepeatedVertex, BadTupleLength };

std::string_view to_string(ViolationKind kind);

// For edge kinds, index is the dense pair index and (x, y) the edge; for
// block kinds, index is the block index.
struct Violation {
  ViolationKind kind;
  std::uint64_t index = 0;
  Vertex x = 0;
  Vertex y = 0;
  std::uint64_t multiplicity = 0;

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct VerifyReport {
  std::string id;
  bool pass = false;
  std::uint64_t copies = 0;
  std::vector<Violation> violations;  // sorted by (kind, index)
};

// Index of the pair {x, y} among all pairs of 0..n-1.
std::uint64_t pair_index(std::size_t n, Vertex x, Vertex y);

// Throws ConfigError when the graph, an action, or a block's graph tag does
// not resolve, or an action is not a permutation of the host.
void check_references(const Decomposition& d, const Catalog& catalog);

// Every developed copy as the image of the catalog graph's vertex tuple.
std::vector<std::vector<Vertex>> explicit_copies(const Decomposition& d);

VerifyReport verify(const Decomposition& d, const Catalog& catalog);

struct EntryResult {
  std::string id;
  bool ok = false;          // verified and passed
  bool config_error = false;
  std::string error;        // set when config_error
  VerifyReport report;
};

struct CorpusSummary {
  std::vector<EntryResult> results;  // input order
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t errors = 0;
  bool all_passed() const { return failed == 0 && errors == 0; }
};

// Verifies entries on up to `jobs` threads (0 = hardware concurrency).
// With fail_fast, entries after the first failure in input order are dropped.
CorpusSummary verify_all(const std::vector<Decomposition>& entries, const Catalog& catalog,
                         unsigned jobs = 0, bool fail_fast = false);

}  // namespace snark
