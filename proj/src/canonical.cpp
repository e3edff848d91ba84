#include <algorithm>
#include <numeric>

#include "snark/graph.hpp"

namespace snark {
namespace {

// Ordered partition of the vertex set, stored as a cell index per vertex.
// Cell indices are assigned from label-invariant data only, so two
// isomorphic graphs walk through corresponding partitions.
using Partition = std::vector<int>;

int cell_count(const Partition& p) {
  return p.empty() ? 0 : *std::max_element(p.begin(), p.end()) + 1;
}

// Refines to the coarsest equitable partition finer than p.
void refine(const Graph& g, Partition& p) {
  const std::size_t n = g.order();
  int cells = cell_count(p);
  std::vector<std::vector<int>> signature(n);
  std::vector<Vertex> order(n);
  while (true) {
    for (Vertex x = 0; x < n; ++x) {
      auto& sig = signature[x];
      sig.assign(static_cast<std::size_t>(cells) + 1, 0);
      sig[0] = p[x];
      for (Vertex y : g.neighbors(x)) ++sig[static_cast<std::size_t>(p[y]) + 1];
    }
    std::iota(order.begin(), order.end(), Vertex{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](Vertex a, Vertex b) { return signature[a] < signature[b]; });
    int next = 0;
    Partition refined(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (i > 0 && signature[order[i]] != signature[order[i - 1]]) ++next;
      refined[order[i]] = next;
    }
    int refined_cells = n == 0 ? 0 : next + 1;
    p = std::move(refined);
    if (refined_cells == cells) return;
    cells = refined_cells;
  }
}

std::string certificate(const Graph& g, const Partition& discrete) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  edges.reserve(g.size());
  for (const Edge& e : g.edges()) {
    auto a = static_cast<Vertex>(discrete[e.u]);
    auto b = static_cast<Vertex>(discrete[e.v]);
    edges.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(edges.begin(), edges.end());
  std::string out;
  auto put = [&out](std::size_t value) {
    out.push_back(static_cast<char>((value >> 8) & 0xff));
    out.push_back(static_cast<char>(value & 0xff));
  };
  put(g.order());
  put(g.size());
  for (auto [a, b] : edges) {
    put(a);
    put(b);
  }
  return out;
}

struct Best {
  std::string cert;
  Partition labeling;
};

void search(const Graph& g, Partition p, Best& best) {
  refine(g, p);
  const int cells = cell_count(p);
  if (cells == static_cast<int>(g.order())) {
    std::string cert = certificate(g, p);
    if (best.labeling.empty() || cert < best.cert) {
      best.cert = std::move(cert);
      best.labeling = std::move(p);
    }
    return;
  }
  // Target: the first smallest non-singleton cell.
  std::vector<int> sizes(static_cast<std::size_t>(cells), 0);
  for (int c : p) ++sizes[static_cast<std::size_t>(c)];
  int target = -1;
  for (int c = 0; c < cells; ++c) {
    if (sizes[c] > 1 && (target < 0 || sizes[c] < sizes[target])) target = c;
  }
  for (Vertex x = 0; x < g.order(); ++x) {
    if (p[x] != target) continue;
    Partition child = p;
    for (auto& c : child) {
      if (c > target) ++c;
    }
    for (Vertex y = 0; y < g.order(); ++y) {
      if (p[y] == target && y != x) child[y] = target + 1;
    }
    search(g, std::move(child), best);
  }
}

Best canonical_labeling(const Graph& g) {
  Best best;
  Partition p(g.order());
  for (Vertex x = 0; x < g.order(); ++x) p[x] = static_cast<int>(g.degree(x));
  // Compress degree values into consecutive cell indices.
  std::vector<int> values(p.begin(), p.end());
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  for (auto& c : p) {
    c = static_cast<int>(std::lower_bound(values.begin(), values.end(), c) - values.begin());
  }
  if (g.order() == 0) {
    best.cert = certificate(g, p);
    return best;
  }
  search(g, std::move(p), best);
  return best;
}

}  // namespace

std::string canonical_form(const Graph& g) { return canonical_labeling(g).cert; }

std::optional<std::vector<Vertex>> isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return std::nullopt;
  Best ca = canonical_labeling(a);
  Best cb = canonical_labeling(b);
  if (ca.cert != cb.cert) return std::nullopt;
  std::vector<Vertex> at_position(b.order());
  for (Vertex y = 0; y < b.order(); ++y) at_position[cb.labeling[y]] = y;
  std::vector<Vertex> map(a.order());
  for (Vertex x = 0; x < a.order(); ++x) map[x] = at_position[ca.labeling[x]];
  for (const Edge& e : a.edges()) {
    if (!b.adjacent(map[e.u], map[e.v])) return std::nullopt;
  }
  return map;
}

}  // namespace snark
