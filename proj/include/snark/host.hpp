#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "snark/catalog.hpp"
#include "snark/graph.hpp"

namespace snark {

// lo, lo+step, ..., up to hi.
struct VertexRange {
  Vertex lo = 0;
  Vertex hi = 0;
  Vertex step = 1;

  friend bool operator==(const VertexRange&, const VertexRange&) = default;
};

// K_n, or a complete multipartite graph on 0..N-1 with an explicit
// partition rule.
class HostSpec {
 public:
  struct Complete {
    std::size_t n = 0;
    friend bool operator==(const Complete&, const Complete&) = default;
  };
  // Part i = {x < span : x = i mod r}; an optional tail lo..hi is either its
  // own part or merged into residue class `join`.
  struct ResidueMod {
    std::size_t r = 0;
    std::size_t span = 0;
    std::optional<std::pair<Vertex, Vertex>> tail;
    std::optional<std::size_t> join;
    friend bool operator==(const ResidueMod&, const ResidueMod&) = default;
  };
  struct Parts {
    std::vector<std::vector<VertexRange>> parts;
    friend bool operator==(const Parts&, const Parts&) = default;
  };
  using Rule = std::variant<Complete, ResidueMod, Parts>;

  HostSpec() : HostSpec(Complete{0}) {}
  explicit HostSpec(Rule rule);  // validates; throws ConfigError

  static HostSpec complete(std::size_t n);
  // Consecutive parts of the given sizes.
  static HostSpec multipartite(const std::vector<std::size_t>& sizes);

  const Rule& rule() const noexcept { return rule_; }
  bool is_complete() const noexcept { return std::holds_alternative<Complete>(rule_); }
  std::size_t order() const noexcept { return part_of_.size(); }

  // Part index of x. In K_n every vertex is its own part.
  std::size_t part_of(Vertex x) const { return part_of_[x]; }
  std::size_t part_count() const noexcept { return parts_.size(); }
  // Sorted vertex lists, one per part.
  const std::vector<std::vector<Vertex>>& parts() const noexcept { return parts_; }
  std::vector<std::size_t> part_sizes() const;

  bool is_host_edge(Vertex x, Vertex y) const;
  std::uint64_t edge_count() const;

  // "K_37", "K_{22,22,22,55}".
  std::string name() const;

  friend bool operator==(const HostSpec& a, const HostSpec& b) { return a.rule_ == b.rule_; }

 private:
  Rule rule_;
  std::vector<std::size_t> part_of_;
  std::vector<std::vector<Vertex>> parts_;
};

// Host grammar, without the leading `host` keyword.
HostSpec parse_host(std::string_view text);
std::string render_host(const HostSpec& h);

// edge_count(h) / e. Throws InadmissibleError when not integral.
std::uint64_t expected_copies(const HostSpec& h, std::uint64_t e);

struct Admissibility {
  int modulus = 1;
  std::vector<int> residues;
  int minimum_order = 1;  // besides the trivial order 1
};

// Residues n mod M with n = 1 (mod 3) and n(n-1) = 0 (mod 3v), M least.
// Throws Error for odd or too small v.
Admissibility admissible_residues(int v);

// "n ≡ 1, 22 (mod 33)", followed by ", n ≠ 16" style exclusions if given.
std::string format_admissibility(const Admissibility& a, const std::vector<int>& excluded = {});

// Divisibility conditions plus any excluded orders of the spectrum.
bool is_admissible_order(int v, std::uint64_t n, const std::optional<Spectrum>& spectrum);

}  // namespace snark
