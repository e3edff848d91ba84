#include "snark/catalog.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>

#include "snark/embedded.hpp"
#include "snark/error.hpp"
#include "text.hpp"

namespace snark {

namespace {

struct SpectrumRow {
  int v;
  Spectrum spectrum;
};

const std::vector<SpectrumRow>& spectrum_table() {
  static const std::vector<SpectrumRow> rows = {
      {10, {15, {1, 10}, {}}},
      {12, {36, {1, 28}, {}}},
      {18, {27, {1}, {}}},
      {20, {60, {1, 16, 25, 40}, {16}}},
      {22, {33, {1, 22}, {}}},
      {24, {72, {1, 64}, {}}},
      {26, {39, {1, 13}, {13}}},
      {28, {84, {1, 28, 49, 64}, {}}},
      {30, {45, {1, 10}, {10}}},
      {34, {51, {1, 34}, {}}},
      {36, {108, {1, 28}, {28}}},
      {40, {120, {1, 16, 25, 40}, {16, 25}}},
      {50, {75, {1, 25}, {25}}},
  };
  return rows;
}

}  // namespace

std::optional<Spectrum> known_spectrum(int v) {
  for (const auto& row : spectrum_table()) {
    if (row.v == v) return row.spectrum;
  }
  return std::nullopt;
}

CatalogGraph parse_graph_file(std::string_view text, const std::string& origin) {
  CatalogGraph out;
  std::size_t order = 0;
  bool have_header = false;
  std::vector<Edge> edges;
  std::size_t line_no = 0;
  for (std::string_view line : text::lines(text)) {
    ++line_no;
    auto toks = text::tokens(text::strip_comment(line));
    if (toks.empty()) continue;
    auto fail = [&](const std::string& msg) { throw ParseError(origin, line_no, msg); };
    if (toks[0] == "graph") {
      if (have_header) fail("duplicate graph header");
      if (toks.size() != 3 || toks[2].substr(0, 2) != "v=") fail("expected `graph NAME v=<int>`");
      out.name = std::string(toks[1]);
      auto v = text::to_uint(toks[2].substr(2));
      if (!v || *v == 0) fail("bad vertex count");
      order = *v;
      have_header = true;
    } else if (toks[0] == "edge") {
      if (!have_header) fail("edge before graph header");
      if (toks.size() != 3) fail("expected `edge i j`");
      auto a = text::to_uint(toks[1]);
      auto b = text::to_uint(toks[2]);
      if (!a || !b) fail("bad edge endpoint");
      if (*a < 1 || *a > order || *b < 1 || *b > order) fail("edge endpoint outside 1..v");
      if (*a == *b) fail("loop edge");
      edges.emplace_back(static_cast<Vertex>(*a - 1), static_cast<Vertex>(*b - 1));
    } else {
      fail("unknown directive `" + std::string(toks[0]) + "`");
    }
  }
  if (!have_header) throw ParseError(origin, line_no, "missing graph header");
  try {
    out.graph = Graph(order, std::move(edges));
  } catch (const std::invalid_argument& err) {
    throw ParseError(origin, line_no, err.what());
  }
  out.spectrum = known_spectrum(static_cast<int>(order));
  return out;
}

std::string render_graph_file(const CatalogGraph& g) {
  std::ostringstream os;
  os << "graph " << g.name << " v=" << g.v() << "\n";
  for (const Edge& e : g.graph.edges()) os << "edge " << e.u + 1 << " " << e.v + 1 << "\n";
  return os.str();
}

Catalog::Catalog(std::vector<CatalogGraph> graphs) : graphs_(std::move(graphs)) {
  std::sort(graphs_.begin(), graphs_.end(),
            [](const CatalogGraph& a, const CatalogGraph& b) { return a.name < b.name; });
  for (std::size_t i = 1; i < graphs_.size(); ++i) {
    if (graphs_[i].name == graphs_[i - 1].name) {
      throw ConfigError("duplicate catalog graph " + graphs_[i].name);
    }
  }
}

const CatalogGraph* Catalog::find(std::string_view name) const {
  auto it = std::lower_bound(graphs_.begin(), graphs_.end(), name,
                             [](const CatalogGraph& g, std::string_view n) { return g.name < n; });
  if (it == graphs_.end() || it->name != name) return nullptr;
  return &*it;
}

const CatalogGraph& Catalog::at(std::string_view name) const {
  const CatalogGraph* g = find(name);
  if (!g) throw ConfigError("unknown graph " + std::string(name));
  return *g;
}

std::vector<CatalogGraph> load_catalog() {
  std::vector<CatalogGraph> out;
  for (const auto& file : embedded::catalog_files()) {
    CatalogGraph g = parse_graph_file(file.text, std::string(file.name));
    if (!is_cubic(g.graph)) throw ConfigError("catalog graph " + g.name + " is not cubic");
    out.push_back(std::move(g));
  }
  std::sort(out.begin(), out.end(),
            [](const CatalogGraph& a, const CatalogGraph& b) { return a.name < b.name; });
  return out;
}

const Catalog& builtin_catalog() {
  static const Catalog catalog(load_catalog());
  return catalog;
}

}  // namespace snark
