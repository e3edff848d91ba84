#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace snark {

// Dancing-links exact cover. Branches on the column with the fewest
// remaining rows (ties: lowest index), rows in insertion order.
class ExactCover {
 public:
  explicit ExactCover(std::size_t columns);

  // Row ids are assigned in call order starting from 0.
  std::size_t add_row(const std::vector<std::size_t>& columns);

  struct Result {
    std::optional<std::vector<std::size_t>> rows;  // sorted row ids
    bool budget_exhausted = false;
    std::uint64_t nodes = 0;
  };

  // Explores at most `node_budget` search nodes (0 = unlimited).
  Result solve(std::uint64_t node_budget = 0);

 private:
  struct Node {
    std::size_t left, right, up, down, column, row;
  };

  void cover(std::size_t c);
  void uncover(std::size_t c);
  bool search(std::vector<std::size_t>& chosen);

  std::vector<Node> nodes_;
  std::vector<std::size_t> size_;
  std::size_t columns_;
  std::size_t rows_ = 0;
  std::uint64_t budget_ = 0;
  std::uint64_t visited_ = 0;
  bool exhausted_ = false;
};

}  // namespace snark
