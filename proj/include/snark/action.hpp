#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "snark/graph.hpp"

namespace snark {

// x -> lo + ((x - lo + step) mod modulus) for lo <= x <= hi.
struct Segment {
  Vertex lo = 0;
  Vertex hi = 0;
  std::uint64_t step = 0;
  std::uint64_t modulus = 1;

  friend bool operator==(const Segment&, const Segment&) = default;
};

// Piecewise cyclic permutation of host vertices. An identity action has no
// segments and fixes everything.
struct ActionSpec {
  std::string id;
  bool identity = false;
  std::vector<Segment> segments;
  std::vector<Vertex> fixed;

  friend bool operator==(const ActionSpec&, const ActionSpec&) = default;
};

ActionSpec identity_action(std::string id);

// Throws ConfigError when x lies in no segment and is not fixed.
Vertex apply(const ActionSpec& a, Vertex x);

// Least t >= 1 with a^t = id.
std::uint64_t permutation_order(const ActionSpec& a);

// Checks segment shape, disjointness, exact coverage of 0..host_order-1 and
// bijectivity. Throws ConfigError.
void validate_action(const ActionSpec& a, std::size_t host_order);

// Image table: result[x] = apply(a, x). Requires a valid action.
std::vector<Vertex> permutation_table(const ActionSpec& a, std::size_t host_order);

struct BaseBlock {
  std::string graph;
  std::string action;
  std::vector<Vertex> tuple;

  friend bool operator==(const BaseBlock&, const BaseBlock&) = default;
};

// Orbit of a tuple: copy t is the image of the tuple under a^t, for
// t = 0 .. permutation_order(a)-1. Short orbits are not collapsed.
std::vector<std::vector<Vertex>> develop(const std::vector<Vertex>& tuple, const ActionSpec& a,
                                         std::size_t host_order);

}  // namespace snark
