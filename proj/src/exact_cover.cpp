#include "snark/exact_cover.hpp"

#include <algorithm>
#include <stdexcept>

namespace snark {

// Node 0 is the root header; nodes 1..columns are column headers.
ExactCover::ExactCover(std::size_t columns) : size_(columns + 1, 0), columns_(columns) {
  nodes_.resize(columns + 1);
  for (std::size_t i = 0; i <= columns; ++i) {
    nodes_[i] = {i == 0 ? columns : i - 1, i == columns ? 0 : i + 1, i, i, i, static_cast<std::size_t>(-1)};
  }
}

std::size_t ExactCover::add_row(const std::vector<std::size_t>& columns) {
  const std::size_t row = rows_++;
  std::size_t first = 0;
  for (std::size_t col : columns) {
    if (col >= columns_) throw std::out_of_range("exact cover column out of range");
    const std::size_t c = col + 1;
    const std::size_t id = nodes_.size();
    Node n{id, id, nodes_[c].up, c, c, row};
    nodes_.push_back(n);
    nodes_[nodes_[c].up].down = id;
    nodes_[c].up = id;
    ++size_[c];
    if (first == 0) {
      first = id;
    } else {
      nodes_[id].left = nodes_[first].left;
      nodes_[id].right = first;
      nodes_[nodes_[first].left].right = id;
      nodes_[first].left = id;
    }
  }
  return row;
}

void ExactCover::cover(std::size_t c) {
  nodes_[nodes_[c].right].left = nodes_[c].left;
  nodes_[nodes_[c].left].right = nodes_[c].right;
  for (std::size_t i = nodes_[c].down; i != c; i = nodes_[i].down) {
    for (std::size_t j = nodes_[i].right; j != i; j = nodes_[j].right) {
      nodes_[nodes_[j].down].up = nodes_[j].up;
      nodes_[nodes_[j].up].down = nodes_[j].down;
      --size_[nodes_[j].column];
    }
  }
}

void ExactCover::uncover(std::size_t c) {
  for (std::size_t i = nodes_[c].up; i != c; i = nodes_[i].up) {
    for (std::size_t j = nodes_[i].left; j != i; j = nodes_[j].left) {
      ++size_[nodes_[j].column];
      nodes_[nodes_[j].down].up = j;
      nodes_[nodes_[j].up].down = j;
    }
  }
  nodes_[nodes_[c].right].left = c;
  nodes_[nodes_[c].left].right = c;
}

bool ExactCover::search(std::vector<std::size_t>& chosen) {
  if (nodes_[0].right == 0) return true;
  if (budget_ && visited_ >= budget_) {
    exhausted_ = true;
    return false;
  }
  ++visited_;
  std::size_t best = nodes_[0].right;
  for (std::size_t c = nodes_[best].right; c != 0; c = nodes_[c].right) {
    if (size_[c] < size_[best]) best = c;
  }
  if (size_[best] == 0) return false;
  cover(best);
  for (std::size_t r = nodes_[best].down; r != best; r = nodes_[r].down) {
    chosen.push_back(nodes_[r].row);
    for (std::size_t j = nodes_[r].right; j != r; j = nodes_[j].right) cover(nodes_[j].column);
    bool found = search(chosen);
    for (std::size_t j = nodes_[r].left; j != r; j = nodes_[j].left) uncover(nodes_[j].column);
    if (found) {
      uncover(best);
      return true;
    }
    chosen.pop_back();
    if (exhausted_) break;
  }
  uncover(best);
  return false;
}

ExactCover::Result ExactCover::solve(std::uint64_t node_budget) {
  budget_ = node_budget;
  visited_ = 0;
  exhausted_ = false;
  std::vector<std::size_t> chosen;
  Result out;
  if (search(chosen)) {
    std::sort(chosen.begin(), chosen.end());
    out.rows = std::move(chosen);
  }
  out.budget_exhausted = exhausted_;
  out.nodes = visited_;
  return out;
}

}  // namespace snark
