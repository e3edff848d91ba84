#include "snark/verify.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <thread>

#include "snark/error.hpp"

namespace snark {

const ActionSpec* Decomposition::find_action(std::string_view action_id) const {
  for (const auto& a : actions) {
    if (a.id == action_id) return &a;
  }
  return nullptr;
}

std::string_view to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::NonHostEdge: return "NonHostEdge";
    case ViolationKind::CoverageDeficit: return "CoverageDeficit";
    case ViolationKind::CoverageExcess: return "CoverageExcess";
    case ViolationKind::RepeatedVertex: return "RepeatedVertex";
    case ViolationKind::BadTupleLength: return "BadTupleLength";
  }
  return "?";
}

std::uint64_t pair_index(std::size_t n, Vertex x, Vertex y) {
  if (x > y) std::swap(x, y);
  std::uint64_t a = x;
  return a * n - a * (a + 1) / 2 + (y - a - 1);
}

void check_references(const Decomposition& d, const Catalog& catalog) {
  catalog.at(d.graph);
  for (const auto& a : d.actions) validate_action(a, d.host.order());
  for (std::size_t i = 0; i < d.actions.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (d.actions[i].id == d.actions[j].id) throw ConfigError("duplicate action id " + d.actions[i].id);
    }
  }
  for (std::size_t i = 0; i < d.blocks.size(); ++i) {
    const BaseBlock& b = d.blocks[i];
    if (b.graph != d.graph) {
      throw ConfigError("block " + std::to_string(i) + " is tagged " + b.graph + ", expected " + d.graph);
    }
    if (!d.find_action(b.action)) {
      throw ConfigError("block " + std::to_string(i) + " uses undeclared action " + b.action);
    }
    for (Vertex x : b.tuple) {
      if (x >= d.host.order()) {
        throw ConfigError("block " + std::to_string(i) + " vertex " + std::to_string(x) + " outside host");
      }
    }
  }
}

std::vector<std::vector<Vertex>> explicit_copies(const Decomposition& d) {
  std::vector<std::vector<Vertex>> out;
  for (const BaseBlock& b : d.blocks) {
    const ActionSpec* a = d.find_action(b.action);
    if (!a) throw ConfigError("undeclared action " + b.action);
    auto orbit = develop(b.tuple, *a, d.host.order());
    for (auto& c : orbit) out.push_back(std::move(c));
  }
  return out;
}

VerifyReport verify(const Decomposition& d, const Catalog& catalog) {
  check_references(d, catalog);
  const CatalogGraph& g = catalog.at(d.graph);
  const std::size_t n = d.host.order();
  VerifyReport report;
  report.id = d.id;

  const std::uint64_t pairs = static_cast<std::uint64_t>(n) * (n > 0 ? n - 1 : 0) / 2;
  std::vector<std::uint32_t> count(pairs, 0);
  std::map<std::uint64_t, std::pair<Edge, std::uint64_t>> non_host;

  for (std::size_t bi = 0; bi < d.blocks.size(); ++bi) {
    const BaseBlock& b = d.blocks[bi];
    if (b.tuple.size() != g.v()) {
      report.violations.push_back({ViolationKind::BadTupleLength, bi, 0, 0, b.tuple.size()});
      continue;
    }
    std::vector<Vertex> sorted = b.tuple;
    std::sort(sorted.begin(), sorted.end());
    std::uint64_t repeats = 0;
    for (std::size_t i = 1; i < sorted.size(); ++i) repeats += sorted[i] == sorted[i - 1];
    if (repeats) report.violations.push_back({ViolationKind::RepeatedVertex, bi, 0, 0, repeats});

    const ActionSpec& a = *d.find_action(b.action);
    for (const auto& copy : develop(b.tuple, a, n)) {
      ++report.copies;
      for (const Edge& e : g.graph.edges()) {
        Vertex x = copy[e.u], y = copy[e.v];
        if (x == y) continue;
        if (!d.host.is_host_edge(x, y)) {
          auto& slot = non_host[pair_index(n, x, y)];
          slot.first = Edge(x, y);
          ++slot.second;
          continue;
        }
        ++count[pair_index(n, x, y)];
      }
    }
  }

  for (const auto& [idx, hit] : non_host) {
    report.violations.push_back({ViolationKind::NonHostEdge, idx, hit.first.u, hit.first.v, hit.second});
  }
  std::vector<Violation> deficit, excess;
  std::uint64_t idx = 0;
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = x + 1; y < n; ++y, ++idx) {
      if (!d.host.is_host_edge(x, y)) continue;
      if (count[idx] == 0) deficit.push_back({ViolationKind::CoverageDeficit, idx, x, y, 0});
      if (count[idx] > 1) excess.push_back({ViolationKind::CoverageExcess, idx, x, y, count[idx]});
    }
  }
  report.violations.insert(report.violations.end(), deficit.begin(), deficit.end());
  report.violations.insert(report.violations.end(), excess.begin(), excess.end());
  std::stable_sort(report.violations.begin(), report.violations.end(),
                   [](const Violation& a, const Violation& b) {
                     if (a.kind != b.kind) return a.kind < b.kind;
                     return a.index < b.index;
                   });
  report.pass = report.violations.empty();
  return report;
}

CorpusSummary verify_all(const std::vector<Decomposition>& entries, const Catalog& catalog,
                         unsigned jobs, bool fail_fast) {
  CorpusSummary summary;
  summary.results.resize(entries.size());
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  jobs = std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(1, entries.size())));

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < entries.size(); i = next++) {
      EntryResult& r = summary.results[i];
      r.id = entries[i].id;
      try {
        r.report = verify(entries[i], catalog);
        r.ok = r.report.pass;
      } catch (const Error& err) {
        r.config_error = true;
        r.error = err.what();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  std::size_t keep = summary.results.size();
  for (std::size_t i = 0; i < summary.results.size(); ++i) {
    const EntryResult& r = summary.results[i];
    if (r.ok) {
      ++summary.passed;
    } else {
      r.config_error ? ++summary.errors : ++summary.failed;
      if (fail_fast) {
        keep = i + 1;
        break;
      }
    }
  }
  summary.results.resize(keep);
  return summary;
}

}  // namespace snark
