#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "snark/graph.hpp"

namespace snark {

// Divisibility classes of design orders plus orders known not to occur.
struct Spectrum {
  int modulus = 1;
  std::vector<int> residues;
  std::vector<int> excluded;
};

struct CatalogGraph {
  std::string name;
  Graph graph;  // 0-based; the file format is 1-based
  std::optional<Spectrum> spectrum;

  std::size_t v() const { return graph.order(); }
  std::size_t e() const { return graph.size(); }
};

// Parses the `graph NAME v=<int>` / `edge i j` format. Edge order is kept.
CatalogGraph parse_graph_file(std::string_view text, const std::string& origin);
std::string render_graph_file(const CatalogGraph& g);

// Spectrum row for cubic graphs on v vertices, when one is known.
std::optional<Spectrum> known_spectrum(int v);

class Catalog {
 public:
  Catalog() = default;
  explicit Catalog(std::vector<CatalogGraph> graphs);

  const std::vector<CatalogGraph>& graphs() const noexcept { return graphs_; }
  const CatalogGraph* find(std::string_view name) const;
  // Throws ConfigError for an unknown name.
  const CatalogGraph& at(std::string_view name) const;

 private:
  std::vector<CatalogGraph> graphs_;
};

// Every embedded graph, validated, sorted by name.
std::vector<CatalogGraph> load_catalog();
const Catalog& builtin_catalog();

}  // namespace snark
