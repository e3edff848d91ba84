#include <array>
#include <bit>
#include <stdexcept>

#include "snark/graph.hpp"

namespace snark {
namespace {

constexpr int kColors = 3;
constexpr unsigned kAllColors = (1u << kColors) - 1;

// Backtracking over edges, always branching on the uncolored edge with the
// fewest admissible colors (ties: lowest edge index). An edge with a single
// admissible color is the forced-propagation case and is taken first.
class EdgeColorer {
 public:
  explicit EdgeColorer(const Graph& g)
      : g_(g), color_(g.size(), -1), used_(g.order(), 0u) {}

  bool solve() {
    if (g_.size() == 0) return true;
    // Colors are interchangeable, so the first edge may be fixed to 0.
    assign(0, 0);
    if (search(1)) return true;
    unassign(0, 0);
    return false;
  }

  const std::vector<int>& colors() const { return color_; }

 private:
  unsigned free_colors(std::size_t edge) const {
    const Edge& e = g_.edges()[edge];
    return kAllColors & ~(used_[e.u] | used_[e.v]);
  }

  void assign(std::size_t edge, int c) {
    const Edge& e = g_.edges()[edge];
    color_[edge] = c;
    used_[e.u] |= 1u << c;
    used_[e.v] |= 1u << c;
  }

  void unassign(std::size_t edge, int c) {
    const Edge& e = g_.edges()[edge];
    color_[edge] = -1;
    used_[e.u] &= ~(1u << c);
    used_[e.v] &= ~(1u << c);
  }

  bool search(std::size_t colored) {
    if (colored == g_.size()) return true;
    std::size_t pick = g_.size();
    int best = kColors + 1;
    for (std::size_t i = 0; i < g_.size(); ++i) {
      if (color_[i] >= 0) continue;
      int options = std::popcount(free_colors(i));
      if (options == 0) return false;
      if (options < best) {
        best = options;
        pick = i;
        if (options == 1) break;
      }
    }
    unsigned options = free_colors(pick);
    for (int c = 0; c < kColors; ++c) {
      if (!(options & (1u << c))) continue;
      assign(pick, c);
      if (search(colored + 1)) return true;
      unassign(pick, c);
    }
    return false;
  }

  const Graph& g_;
  std::vector<int> color_;
  std::vector<unsigned> used_;
};

}  // namespace

std::optional<std::vector<int>> find_3_edge_coloring(const Graph& g) {
  if (!is_cubic(g)) {
    throw std::invalid_argument("3-edge-coloring check requires a cubic graph");
  }
  EdgeColorer colorer(g);
  if (!colorer.solve()) return std::nullopt;
  return colorer.colors();
}

bool has_proper_3_edge_coloring(const Graph& g) {
  return find_3_edge_coloring(g).has_value();
}

}  // namespace snark
