#pragma once

#include <atomic>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "snark/action.hpp"
#include "snark/catalog.hpp"
#include "snark/host.hpp"
#include "snark/verify.hpp"

namespace snark {

struct SearchProblem {
  HostSpec host;
  std::string graph;
  ActionSpec action;
  std::size_t block_count = 0;
};

// Throws ConfigError unless the action is a permutation of the host and
// block_count * order(action) * e equals the host's edge count.
void check_problem(const SearchProblem& p, const Catalog& catalog);

constexpr std::uint64_t kNonHostPenalty = 4;
constexpr std::uint64_t kRepeatPenalty = 4;

// Sum over host pairs of |coverage - 1|, plus kNonHostPenalty per developed
// edge inside a part and kRepeatPenalty per repeated tuple coordinate.
// Zero exactly when the blocks verify.
std::uint64_t cost(const SearchProblem& p, const std::vector<std::vector<Vertex>>& blocks, const Catalog& catalog);

struct SearchBudget {
  std::uint64_t max_steps = 2'000'000;
  std::uint64_t max_restarts = 0;  // 0: unlimited
  std::uint64_t plateau = 0;       // 0: 20 * total coordinates
  std::uint64_t audit_every = 0;   // compare against a full recount every N steps
};

struct SearchResult {
  std::optional<std::vector<std::vector<Vertex>>> blocks;
  std::uint64_t seed = 0;
  std::uint64_t steps = 0;
  std::uint64_t restarts = 0;
  std::uint64_t best_cost = 0;
  std::uint64_t audits = 0;
};

// Hill climbing with sideways moves on single tuple coordinates. The same
// seed gives the same trajectory. Stops early when `cancel` becomes true.
SearchResult local_search(const SearchProblem& p, std::uint64_t seed, const SearchBudget& budget,
                          const Catalog& catalog, const std::atomic<bool>* cancel = nullptr);

// Runs seeds first_seed .. first_seed + seeds - 1 on up to `jobs` threads
// (0 = hardware concurrency) and returns the lowest successful seed, or the
// run of first_seed when none succeeds.
SearchResult parallel_search(const SearchProblem& p, std::uint64_t first_seed, std::uint64_t seeds,
                             const SearchBudget& budget, const Catalog& catalog, unsigned jobs = 0);

// The problem's blocks as a corpus entry; the last host vertex is rendered
// as INF when the action fixes it.
Decomposition to_decomposition(const SearchProblem& p, const std::vector<std::vector<Vertex>>& blocks,
                               const std::string& id);

// Cyclic actions on the host (with and without a fixed infinity, and
// residue-preserving shifts on residue hosts) whose orbit arithmetic admits
// a whole number of base blocks.
std::vector<SearchProblem> suggest_problems(const HostSpec& host, const std::string& graph, const Catalog& catalog);

}  // namespace snark
