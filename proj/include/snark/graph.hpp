#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace snark {

using Vertex = std::uint32_t;

// Unordered pair, normalized so that u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Simple undirected graph on vertices 0..order-1. Immutable after
// construction; rejects loops, duplicate edges and out-of-range endpoints.
class Graph {
 public:
  Graph() = default;
  Graph(std::size_t order, std::vector<Edge> edges);

  std::size_t order() const noexcept { return adjacency_.size(); }
  std::size_t size() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::span<const Vertex> neighbors(Vertex x) const { return adjacency_[x]; }
  std::size_t degree(Vertex x) const { return adjacency_[x].size(); }
  bool adjacent(Vertex x, Vertex y) const;

  // Image under a vertex relabeling old -> perm[old].
  Graph relabeled(std::span<const Vertex> perm) const;

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
};

std::vector<int> degree_sequence(const Graph& g);
bool is_cubic(const Graph& g);
bool is_connected(const Graph& g);

// Length of a shortest cycle; nullopt when the graph is a forest.
std::optional<int> girth(const Graph& g);

// True when no edge is a cut edge.
bool is_bridgeless(const Graph& g);

// Exhaustive search for a proper 3-edge-coloring of a cubic graph.
// Returns one color (0,1,2) per edge in edges() order. Throws
// std::invalid_argument for non-cubic input.
std::optional<std::vector<int>> find_3_edge_coloring(const Graph& g);
bool has_proper_3_edge_coloring(const Graph& g);

// Canonical labeling by partition refinement plus individualization.
// Isomorphic graphs produce identical strings.
std::string canonical_form(const Graph& g);

// Returns a bijection f (vertex of a -> vertex of b) mapping edges onto
// edges, or nullopt when the graphs are not isomorphic.
std::optional<std::vector<Vertex>> isomorphic(const Graph& a, const Graph& b);

// Small named graphs used in tests and examples.
Graph complete_graph(std::size_t n);
Graph prism_graph(std::size_t n);

}  // namespace snark
