#pragma once

// Independent brute-force checks used to cross-examine the library.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <queue>
#include <random>
#include <set>
#include <vector>

#include "snark/graph.hpp"
#include "snark/host.hpp"

namespace oracle {

using snark::Edge;
using snark::Graph;
using snark::Vertex;

inline std::vector<std::vector<char>> adjacency_matrix(const Graph& g) {
  std::vector<std::vector<char>> m(g.order(), std::vector<char>(g.order(), 0));
  for (const Edge& e : g.edges()) m[e.u][e.v] = m[e.v][e.u] = 1;
  return m;
}

// Plain backtracking over vertex maps, extending in BFS order of `a` and
// checking every adjacency and non-adjacency against mapped vertices.
inline bool isomorphic(const Graph& a, const Graph& b) {
  const std::size_t n = a.order();
  if (n != b.order() || a.size() != b.size()) return false;
  auto da = snark::degree_sequence(a), db = snark::degree_sequence(b);
  auto sa = da, sb = db;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) return false;
  auto ma = adjacency_matrix(a), mb = adjacency_matrix(b);

  std::vector<Vertex> order;
  std::vector<char> seen(n, 0);
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::queue<Vertex> q;
    q.push(s);
    seen[s] = 1;
    while (!q.empty()) {
      Vertex x = q.front();
      q.pop();
      order.push_back(x);
      for (Vertex y : a.neighbors(x)) {
        if (!seen[y]) {
          seen[y] = 1;
          q.push(y);
        }
      }
    }
  }
  std::vector<int> map(n, -1);
  std::vector<char> used(n, 0);
  std::function<bool(std::size_t)> extend = [&](std::size_t depth) {
    if (depth == n) return true;
    Vertex x = order[depth];
    for (Vertex y = 0; y < n; ++y) {
      if (used[y] || da[x] != db[y]) continue;
      bool ok = true;
      for (std::size_t i = 0; i < depth && ok; ++i) {
        Vertex p = order[i];
        ok = ma[x][p] == mb[y][static_cast<Vertex>(map[p])];
      }
      if (!ok) continue;
      map[x] = static_cast<int>(y);
      used[y] = 1;
      if (extend(depth + 1)) return true;
      used[y] = 0;
      map[x] = -1;
    }
    return false;
  };
  return extend(0);
}

// Tries all 3^m color assignments. Only for tiny graphs.
inline bool three_edge_colorable_exhaustive(const Graph& g) {
  const std::size_t m = g.size();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < m; ++i) total *= 3;
  std::vector<int> color(m);
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t c = code;
    for (std::size_t i = 0; i < m; ++i) {
      color[i] = static_cast<int>(c % 3);
      c /= 3;
    }
    bool proper = true;
    for (std::size_t i = 0; i < m && proper; ++i) {
      for (std::size_t j = i + 1; j < m && proper; ++j) {
        const Edge &a = g.edges()[i], &b = g.edges()[j];
        bool touch = a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v;
        if (touch && color[i] == color[j]) proper = false;
      }
    }
    if (proper) return true;
  }
  return false;
}

inline bool is_proper_edge_coloring(const Graph& g, const std::vector<int>& color) {
  std::vector<std::set<int>> at(g.order());
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (color[i] < 0 || color[i] > 2) return false;
    if (!at[g.edges()[i].u].insert(color[i]).second) return false;
    if (!at[g.edges()[i].v].insert(color[i]).second) return false;
  }
  return true;
}

// Girth as the minimum over edges {u,v} of 1 + dist(u, v) in g - {u,v}.
inline int girth_by_edge_removal(const Graph& g) {
  int best = -1;
  for (const Edge& e : g.edges()) {
    std::vector<int> dist(g.order(), -1);
    std::queue<Vertex> q;
    dist[e.u] = 0;
    q.push(e.u);
    while (!q.empty()) {
      Vertex x = q.front();
      q.pop();
      for (Vertex y : g.neighbors(x)) {
        if ((x == e.u && y == e.v) || (x == e.v && y == e.u)) continue;
        if (dist[y] < 0) {
          dist[y] = dist[x] + 1;
          q.push(y);
        }
      }
    }
    if (dist[e.v] >= 0 && (best < 0 || dist[e.v] + 1 < best)) best = dist[e.v] + 1;
  }
  return best;
}

inline std::uint64_t host_edges_by_enumeration(const snark::HostSpec& h) {
  std::uint64_t count = 0;
  for (Vertex x = 0; x < h.order(); ++x)
    for (Vertex y = x + 1; y < h.order(); ++y) count += h.part_of(x) != h.part_of(y);
  return count;
}

// Decomposition check by pairwise intersection: every copy uses host edges
// only, no two copies share an edge, and together they have edge_count edges.
inline bool decomposes_pairwise(const snark::HostSpec& h, const Graph& g,
                                const std::vector<std::vector<Vertex>>& copies) {
  std::vector<std::set<std::pair<Vertex, Vertex>>> sets;
  std::uint64_t total = 0;
  for (const auto& c : copies) {
    std::set<std::pair<Vertex, Vertex>> s;
    for (const Edge& e : g.edges()) {
      Vertex x = c[e.u], y = c[e.v];
      if (x == y || h.part_of(x) == h.part_of(y)) return false;
      s.insert({std::min(x, y), std::max(x, y)});
    }
    if (s.size() != g.size()) return false;
    total += s.size();
    sets.push_back(std::move(s));
  }
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = i + 1; j < sets.size(); ++j) {
      for (const auto& p : sets[i]) {
        if (sets[j].count(p)) return false;
      }
    }
  }
  return total == h.edge_count();
}

inline std::vector<Vertex> random_permutation(std::size_t n, std::mt19937_64& rng) {
  std::vector<Vertex> p(n);
  for (Vertex i = 0; i < n; ++i) p[i] = i;
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

// Group-divisible design check by counting every pair in a std::map.
inline bool is_gdd(std::size_t k, std::size_t points, const std::vector<std::vector<Vertex>>& groups,
                   const std::vector<std::vector<Vertex>>& blocks) {
  std::map<Vertex, std::size_t> group_of;
  for (std::size_t i = 0; i < groups.size(); ++i)
    for (Vertex x : groups[i])
      if (!group_of.emplace(x, i).second || x >= points) return false;
  if (group_of.size() != points) return false;
  std::map<std::pair<Vertex, Vertex>, int> seen;
  for (const auto& b : blocks) {
    if (b.size() != k) return false;
    for (std::size_t i = 0; i < b.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) {
        if (i == j) continue;
        if (b[i] == b[j] || !group_of.count(b[i]) || !group_of.count(b[j])) return false;
        if (group_of[b[i]] == group_of[b[j]]) return false;
        ++seen[{b[i], b[j]}];
      }
  }
  for (Vertex x = 0; x < points; ++x)
    for (Vertex y = 0; y < points; ++y)
      if (x != y && group_of[x] != group_of[y] && seen[{x, y}] != 1) return false;
  return true;
}

}  // namespace oracle
