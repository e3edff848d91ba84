#include "snark/action.hpp"

#include <algorithm>
#include <numeric>

#include "snark/error.hpp"

namespace snark {

ActionSpec identity_action(std::string id) {
  ActionSpec a;
  a.id = std::move(id);
  a.identity = true;
  return a;
}

Vertex apply(const ActionSpec& a, Vertex x) {
  if (a.identity) return x;
  for (const Segment& s : a.segments) {
    if (x >= s.lo && x <= s.hi) {
      return static_cast<Vertex>(s.lo + (x - s.lo + s.step) % s.modulus);
    }
  }
  if (std::find(a.fixed.begin(), a.fixed.end(), x) != a.fixed.end()) return x;
  throw ConfigError("action " + a.id + " does not act on vertex " + std::to_string(x));
}

std::uint64_t permutation_order(const ActionSpec& a) {
  std::uint64_t order = 1;
  for (const Segment& s : a.segments) {
    std::uint64_t cycle = s.modulus / std::gcd(s.step % s.modulus, s.modulus);
    order = std::lcm(order, cycle);
  }
  return order;
}

void validate_action(const ActionSpec& a, std::size_t host_order) {
  auto fail = [&](const std::string& msg) { throw ConfigError("action " + a.id + ": " + msg); };
  if (a.identity) {
    if (!a.segments.empty() || !a.fixed.empty()) fail("identity action with segments");
    return;
  }
  std::vector<char> covered(host_order, 0);
  auto claim = [&](Vertex x) {
    if (x >= host_order) fail("vertex " + std::to_string(x) + " outside host");
    if (covered[x]) fail("vertex " + std::to_string(x) + " covered twice");
    covered[x] = 1;
  };
  for (const Segment& s : a.segments) {
    if (s.modulus == 0) fail("zero modulus");
    if (s.hi < s.lo || s.hi - s.lo + 1 != s.modulus) {
      fail("segment " + std::to_string(s.lo) + ".." + std::to_string(s.hi) +
           " does not span its modulus " + std::to_string(s.modulus));
    }
    for (Vertex x = s.lo; x <= s.hi; ++x) claim(x);
  }
  for (Vertex x : a.fixed) claim(x);
  for (std::size_t x = 0; x < host_order; ++x) {
    if (!covered[x]) fail("vertex " + std::to_string(x) + " not acted on");
  }
  std::vector<char> hit(host_order, 0);
  for (Vertex x = 0; x < host_order; ++x) {
    Vertex y = apply(a, x);
    if (y >= host_order || hit[y]) fail("not a permutation");
    hit[y] = 1;
  }
}

std::vector<Vertex> permutation_table(const ActionSpec& a, std::size_t host_order) {
  std::vector<Vertex> table(host_order);
  for (Vertex x = 0; x < host_order; ++x) table[x] = apply(a, x);
  return table;
}

std::vector<std::vector<Vertex>> develop(const std::vector<Vertex>& tuple, const ActionSpec& a,
                                         std::size_t host_order) {
  const std::uint64_t order = permutation_order(a);
  std::vector<std::vector<Vertex>> copies;
  copies.reserve(order);
  copies.push_back(tuple);
  if (order == 1) return copies;
  std::vector<Vertex> table = permutation_table(a, host_order);
  for (std::uint64_t t = 1; t < order; ++t) {
    std::vector<Vertex> next = copies.back();
    for (Vertex& x : next) x = table[x];
    copies.push_back(std::move(next));
  }
  return copies;
}

}  // namespace snark
