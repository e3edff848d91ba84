#include "snark/graph.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>
#include <string>

namespace snark {

Graph::Graph(std::size_t order, std::vector<Edge> edges)
    : edges_(std::move(edges)), adjacency_(order) {
  for (const Edge& e : edges_) {
    if (e.u == e.v) {
      throw std::invalid_argument("loop at vertex " + std::to_string(e.u));
    }
    if (e.v >= order) {
      throw std::invalid_argument("edge endpoint " + std::to_string(e.v) +
                                  " outside 0.." + std::to_string(order - 1));
    }
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
  for (auto& nbrs : adjacency_) {
    std::sort(nbrs.begin(), nbrs.end());
    if (std::adjacent_find(nbrs.begin(), nbrs.end()) != nbrs.end()) {
      throw std::invalid_argument("duplicate edge");
    }
  }
}

bool Graph::adjacent(Vertex x, Vertex y) const {
  const auto& nbrs = adjacency_[x];
  return std::binary_search(nbrs.begin(), nbrs.end(), y);
}

Graph Graph::relabeled(std::span<const Vertex> perm) const {
  std::vector<Edge> out;
  out.reserve(edges_.size());
  for (const Edge& e : edges_) out.emplace_back(perm[e.u], perm[e.v]);
  return Graph(order(), std::move(out));
}

std::vector<int> degree_sequence(const Graph& g) {
  std::vector<int> out(g.order());
  for (Vertex x = 0; x < g.order(); ++x) out[x] = static_cast<int>(g.degree(x));
  return out;
}

bool is_cubic(const Graph& g) {
  for (Vertex x = 0; x < g.order(); ++x) {
    if (g.degree(x) != 3) return false;
  }
  return true;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  std::vector<char> seen(g.order(), 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    Vertex x = stack.back();
    stack.pop_back();
    for (Vertex y : g.neighbors(x)) {
      if (!seen[y]) {
        seen[y] = 1;
        ++reached;
        stack.push_back(y);
      }
    }
  }
  return reached == g.order();
}

std::optional<int> girth(const Graph& g) {
  const std::size_t n = g.order();
  int best = std::numeric_limits<int>::max();
  std::vector<int> dist(n);
  std::vector<Vertex> parent(n);
  for (Vertex s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[s] = 0;
    parent[s] = s;
    std::queue<Vertex> q;
    q.push(s);
    while (!q.empty()) {
      Vertex x = q.front();
      q.pop();
      if (2 * dist[x] + 1 >= best) break;
      for (Vertex y : g.neighbors(x)) {
        if (dist[y] < 0) {
          dist[y] = dist[x] + 1;
          parent[y] = x;
          q.push(y);
        } else if (parent[x] != y) {
          best = std::min(best, dist[x] + dist[y] + 1);
        }
      }
    }
  }
  if (best == std::numeric_limits<int>::max()) return std::nullopt;
  return best;
}

bool is_bridgeless(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<int> disc(n, -1), low(n, 0);
  int timer = 0;
  struct Frame {
    Vertex x;
    Vertex parent;
    std::size_t next;
  };
  for (Vertex root = 0; root < n; ++root) {
    if (disc[root] >= 0) continue;
    std::vector<Frame> stack{{root, root, 0}};
    disc[root] = low[root] = timer++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      auto nbrs = g.neighbors(f.x);
      if (f.next < nbrs.size()) {
        Vertex y = nbrs[f.next++];
        if (y == f.parent) continue;
        if (disc[y] < 0) {
          disc[y] = low[y] = timer++;
          stack.push_back({y, f.x, 0});
        } else {
          low[f.x] = std::min(low[f.x], disc[y]);
        }
      } else {
        Frame done = f;
        stack.pop_back();
        if (!stack.empty()) {
          Vertex p = stack.back().x;
          low[p] = std::min(low[p], low[done.x]);
          if (low[done.x] > disc[p]) return false;
        }
      }
    }
  }
  return true;
}

Graph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return Graph(n, std::move(edges));
}

Graph prism_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) {
    Vertex next = static_cast<Vertex>((i + 1) % n);
    edges.emplace_back(i, next);
    edges.emplace_back(static_cast<Vertex>(n + i), static_cast<Vertex>(n + next));
    edges.emplace_back(i, static_cast<Vertex>(n + i));
  }
  return Graph(2 * n, std::move(edges));
}

}  // namespace snark
