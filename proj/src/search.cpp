#include "snark/search.hpp"

#include <algorithm>
#include <limits>
#include <memory>
#include <mutex>
#include <numeric>
#include <random>
#include <thread>

#include "snark/error.hpp"

namespace snark {

namespace {

constexpr std::uint64_t kMaxTable = 50'000'000;

std::uint64_t below(std::mt19937_64& rng, std::uint64_t n) {
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = max - max % n;
  for (;;) {
    std::uint64_t r = rng();
    if (r < limit) return r % n;
  }
}

// Incremental edge-coverage bookkeeping for one problem.
class State {
 public:
  State(const SearchProblem& p, const Catalog& catalog)
      : n_(p.host.order()), graph_(catalog.at(p.graph).graph), blocks_(p.block_count) {
    const auto table = permutation_table(p.action, n_);
    order_ = permutation_order(p.action);
    powers_.resize(order_ * n_);
    std::iota(powers_.begin(), powers_.begin() + static_cast<std::ptrdiff_t>(n_), Vertex{0});
    for (std::uint64_t t = 1; t < order_; ++t) {
      for (std::size_t x = 0; x < n_; ++x) powers_[t * n_ + x] = table[powers_[(t - 1) * n_ + x]];
    }
    const std::size_t pairs = n_ * (n_ - 1) / 2;
    count_.assign(pairs, 0);
    host_.assign(pairs, 0);
    for (Vertex x = 0; x < n_; ++x) {
      for (Vertex y = x + 1; y < n_; ++y) host_[pair_index(n_, x, y)] = p.host.is_host_edge(x, y);
    }
    host_pairs_ = p.host.edge_count();
    incident_.resize(graph_.order());
    const auto& edges = graph_.edges();
    for (std::size_t k = 0; k < edges.size(); ++k) {
      incident_[edges[k].u].push_back(k);
      incident_[edges[k].v].push_back(k);
    }
  }

  std::size_t coordinates() const { return blocks_ * graph_.order(); }

  void randomize(std::mt19937_64& rng) {
    std::vector<Vertex> pool(n_);
    tuples_.assign(blocks_, {});
    for (auto& tuple : tuples_) {
      std::iota(pool.begin(), pool.end(), Vertex{0});
      for (std::size_t i = 0; i < graph_.order(); ++i) {
        std::size_t j = i + below(rng, n_ - i);
        std::swap(pool[i], pool[j]);
      }
      tuple.assign(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(graph_.order()));
    }
    recount();
  }

  void recount() {
    std::fill(count_.begin(), count_.end(), 0);
    cost_ = static_cast<std::int64_t>(host_pairs_);
    for (std::size_t b = 0; b < blocks_; ++b) {
      for (std::size_t k = 0; k < graph_.size(); ++k) cost_ += edge(b, k, +1);
    }
  }

  std::int64_t cost() const { return cost_; }
  const std::vector<std::vector<Vertex>>& tuples() const { return tuples_; }

  // Moves coordinate i of block b to y, swapping with the coordinate already
  // holding y. Returns the cost change.
  std::int64_t move(std::size_t b, std::size_t i, Vertex y) {
    auto& tuple = tuples_[b];
    std::size_t j = tuple.size();
    for (std::size_t c = 0; c < tuple.size(); ++c) {
      if (tuple[c] == y) j = c;
    }
    affected_.assign(incident_[i].begin(), incident_[i].end());
    if (j < tuple.size()) affected_.insert(affected_.end(), incident_[j].begin(), incident_[j].end());
    std::sort(affected_.begin(), affected_.end());
    affected_.erase(std::unique(affected_.begin(), affected_.end()), affected_.end());

    std::int64_t delta = 0;
    for (std::size_t k : affected_) delta += edge(b, k, -1);
    if (j < tuple.size()) tuple[j] = tuple[i];
    tuple[i] = y;
    for (std::size_t k : affected_) delta += edge(b, k, +1);
    cost_ += delta;
    return delta;
  }

 private:
  // Adds (+1) or removes (-1) every developed copy of edge k of block b.
  std::int64_t edge(std::size_t b, std::size_t k, int sign) {
    const auto& tuple = tuples_[b];
    const Edge& e = graph_.edges()[k];
    const Vertex x0 = tuple[e.u], y0 = tuple[e.v];
    std::int64_t delta = 0;
    for (std::uint64_t t = 0; t < order_; ++t) {
      const Vertex x = powers_[t * n_ + x0], y = powers_[t * n_ + y0];
      if (x == y) continue;
      const std::uint64_t idx = pair_index(n_, x, y);
      if (!host_[idx]) {
        delta += sign * static_cast<std::int64_t>(kNonHostPenalty);
        continue;
      }
      std::uint32_t& c = count_[idx];
      if (sign > 0) {
        delta += c >= 1 ? 1 : -1;
        ++c;
      } else {
        delta += c >= 2 ? -1 : 1;
        --c;
      }
    }
    return delta;
  }

  std::size_t n_;
  const Graph& graph_;
  std::size_t blocks_;
  std::uint64_t order_ = 1;
  std::vector<Vertex> powers_;
  std::vector<std::uint32_t> count_;
  std::vector<char> host_;
  std::uint64_t host_pairs_ = 0;
  std::vector<std::vector<std::size_t>> incident_;
  std::vector<std::vector<Vertex>> tuples_;
  std::vector<std::size_t> affected_;
  std::int64_t cost_ = 0;
};

ActionSpec cyclic(std::vector<Segment> segments, std::vector<Vertex> fixed) {
  ActionSpec a;
  a.id = "a";
  a.segments = std::move(segments);
  a.fixed = std::move(fixed);
  return a;
}

std::vector<std::size_t> proper_divisors(std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d == 0) out.push_back(d);
  }
  return out;
}

}  // namespace

void check_problem(const SearchProblem& p, const Catalog& catalog) {
  const auto& g = catalog.at(p.graph);
  const std::size_t n = p.host.order();
  validate_action(p.action, n);
  if (g.v() > n) throw ConfigError("graph " + g.name + " has more vertices than " + p.host.name());
  const std::uint64_t order = permutation_order(p.action);
  if (order * n > kMaxTable) throw ConfigError("action order " + std::to_string(order) + " is too large");
  const std::uint64_t claimed = static_cast<std::uint64_t>(p.block_count) * order * g.e();
  if (claimed != p.host.edge_count()) {
    throw ConfigError(std::to_string(p.block_count) + " blocks x order " + std::to_string(order) + " x " +
                      std::to_string(g.e()) + " edges = " + std::to_string(claimed) + ", but " + p.host.name() +
                      " has " + std::to_string(p.host.edge_count()) + " edges");
  }
}

std::uint64_t cost(const SearchProblem& p, const std::vector<std::vector<Vertex>>& blocks, const Catalog& catalog) {
  const auto& g = catalog.at(p.graph).graph;
  const std::size_t n = p.host.order();
  validate_action(p.action, n);
  std::vector<std::uint64_t> count(n * (n - 1) / 2, 0);
  std::uint64_t penalty = 0;
  for (const auto& tuple : blocks) {
    if (tuple.size() != g.order()) throw ConfigError("tuple length differs from the graph order");
    std::vector<Vertex> sorted = tuple;
    std::sort(sorted.begin(), sorted.end());
    penalty += kRepeatPenalty * static_cast<std::uint64_t>(
                                    sorted.end() - std::unique(sorted.begin(), sorted.end()));
    for (const auto& copy : develop(tuple, p.action, n)) {
      for (const Edge& e : g.edges()) {
        const Vertex x = copy[e.u], y = copy[e.v];
        if (x == y) continue;
        if (p.host.is_host_edge(x, y)) {
          ++count[pair_index(n, x, y)];
        } else {
          penalty += kNonHostPenalty;
        }
      }
    }
  }
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = x + 1; y < n; ++y) {
      if (!p.host.is_host_edge(x, y)) continue;
      const std::uint64_t c = count[pair_index(n, x, y)];
      penalty += c > 1 ? c - 1 : 1 - c;
    }
  }
  return penalty;
}

SearchResult local_search(const SearchProblem& p, std::uint64_t seed, const SearchBudget& budget,
                          const Catalog& catalog, const std::atomic<bool>* cancel) {
  check_problem(p, catalog);
  SearchResult result;
  result.seed = seed;
  const std::size_t n = p.host.order();
  const std::size_t v = catalog.at(p.graph).v();
  if (p.block_count == 0) {
    result.blocks.emplace();
    return result;
  }

  std::mt19937_64 rng(seed);
  State state(p, catalog);
  const std::uint64_t plateau = budget.plateau ? budget.plateau : 20 * state.coordinates();
  state.randomize(rng);
  std::int64_t best = state.cost();
  std::int64_t overall = best;
  std::uint64_t stale = 0;

  while (state.cost() != 0 && result.steps < budget.max_steps) {
    if (cancel && (result.steps & 1023) == 0 && cancel->load(std::memory_order_relaxed)) break;
    ++result.steps;
    const std::size_t b = below(rng, p.block_count);
    const std::size_t i = below(rng, v);
    const Vertex y = static_cast<Vertex>(below(rng, n));
    if (state.tuples()[b][i] != y) {
      const Vertex old = state.tuples()[b][i];
      if (state.move(b, i, y) > 0) state.move(b, i, old);
    }
    if (state.cost() < best) {
      best = state.cost();
      overall = std::min(overall, best);
      stale = 0;
    } else if (++stale >= plateau && (budget.max_restarts == 0 || result.restarts < budget.max_restarts)) {
      ++result.restarts;
      state.randomize(rng);
      best = state.cost();
      overall = std::min(overall, best);
      stale = 0;
    }
    if (budget.audit_every && result.steps % budget.audit_every == 0) {
      ++result.audits;
      if (cost(p, state.tuples(), catalog) != static_cast<std::uint64_t>(state.cost())) {
        throw Error("search: incremental cost disagrees with a full recount");
      }
    }
  }
  result.best_cost = static_cast<std::uint64_t>(std::min(overall, state.cost()));
  if (state.cost() == 0) result.blocks = state.tuples();
  return result;
}

SearchResult parallel_search(const SearchProblem& p, std::uint64_t first_seed, std::uint64_t seeds,
                             const SearchBudget& budget, const Catalog& catalog, unsigned jobs) {
  check_problem(p, catalog);
  if (seeds == 0) throw ConfigError("no seeds to run");
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  jobs = static_cast<unsigned>(std::min<std::uint64_t>(jobs, seeds));

  std::vector<std::optional<SearchResult>> results(seeds);
  auto cancel = std::make_unique<std::atomic<bool>[]>(seeds);
  std::atomic<std::uint64_t> next{0};
  std::atomic<std::uint64_t> winner{seeds};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&] {
    for (;;) {
      const std::uint64_t k = next.fetch_add(1);
      if (k >= seeds) return;
      if (k > winner.load()) continue;
      try {
        auto r = local_search(p, first_seed + k, budget, catalog, &cancel[k]);
        if (r.blocks) {
          std::uint64_t w = winner.load();
          while (k < w && !winner.compare_exchange_weak(w, k)) {
          }
          for (std::uint64_t j = k + 1; j < seeds; ++j) cancel[j].store(true);
        }
        results[k] = std::move(r);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        for (std::uint64_t j = 0; j < seeds; ++j) cancel[j].store(true);
      }
    }
  };
  std::vector<std::thread> threads;
  for (unsigned t = 1; t < jobs; ++t) threads.emplace_back(worker);
  worker();
  for (auto& t : threads) t.join();
  if (failure) std::rethrow_exception(failure);

  const std::uint64_t w = winner.load();
  return w < seeds ? *results[w] : *results[0];
}

Decomposition to_decomposition(const SearchProblem& p, const std::vector<std::vector<Vertex>>& blocks,
                               const std::string& id) {
  Decomposition d;
  d.id = id;
  d.source = "search";
  d.host = p.host;
  d.graph = p.graph;
  d.actions = {p.action};
  const std::size_t n = p.host.order();
  d.infinity = !p.action.identity && n > 0 &&
               std::find(p.action.fixed.begin(), p.action.fixed.end(), static_cast<Vertex>(n - 1)) !=
                   p.action.fixed.end();
  for (const auto& tuple : blocks) d.blocks.push_back({p.graph, p.action.id, tuple});
  return d;
}

std::vector<SearchProblem> suggest_problems(const HostSpec& host, const std::string& graph, const Catalog& catalog) {
  const auto& g = catalog.at(graph);
  const std::size_t n = host.order();
  const std::uint64_t edges = host.edge_count();
  std::vector<SearchProblem> out;
  if (n < g.v() || edges == 0) return out;

  auto offer = [&](ActionSpec a) {
    const std::uint64_t per_block = permutation_order(a) * g.e();
    if (edges % per_block != 0) return;
    out.push_back({host, graph, std::move(a), static_cast<std::size_t>(edges / per_block)});
  };
  auto last = [](std::size_t m) { return static_cast<Vertex>(m - 1); };

  if (host.is_complete()) {
    for (std::size_t s : proper_divisors(n)) offer(cyclic({{0, last(n), s, n}}, {}));
    if (n >= 2) {
      for (std::size_t s : proper_divisors(n - 1)) offer(cyclic({{0, last(n - 1), s, n - 1}}, {last(n)}));
    }
  } else if (const auto* r = std::get_if<HostSpec::ResidueMod>(&host.rule())) {
    for (std::size_t s = r->r; s < r->span; s += r->r) {
      if (r->span % s != 0) continue;
      Segment body{0, last(r->span), s, r->span};
      if (!r->tail) {
        offer(cyclic({body}, {}));
        continue;
      }
      const auto [lo, hi] = *r->tail;
      const std::size_t m = hi - lo + 1;
      std::vector<Vertex> all(m);
      std::iota(all.begin(), all.end(), lo);
      offer(cyclic({body}, all));
      for (std::size_t t : proper_divisors(m)) offer(cyclic({body, {lo, hi, t, m}}, {}));
    }
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const SearchProblem& a, const SearchProblem& b) { return a.block_count < b.block_count; });
  return out;
}

}  // namespace snark
