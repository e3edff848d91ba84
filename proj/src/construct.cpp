#include "snark/construct.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <sstream>

#include "snark/corpus.hpp"
#include "snark/error.hpp"

namespace snark {

namespace {

std::string lower(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

std::string filler_name(std::vector<std::size_t> parts) {
  std::sort(parts.begin(), parts.end());
  return HostSpec::multipartite(parts).name();
}

std::vector<std::size_t> signature(const HostSpec& h) {
  auto s = h.part_sizes();
  std::sort(s.begin(), s.end());
  return s;
}

// Explicit copies accumulated on a fixed host.
struct Assembly {
  HostSpec host;
  std::string graph;
  bool infinity = false;
  std::vector<std::vector<Vertex>> copies;

  // Copies of d with ingredient vertex x sent to map[x].
  void place(const Decomposition& d, const std::vector<Vertex>& map) {
    if (d.graph != graph) throw ConfigError("ingredient " + d.id + " is for " + d.graph + ", not " + graph);
    for (auto copy : explicit_copies(d)) {
      for (Vertex& x : copy) x = map[x];
      copies.push_back(std::move(copy));
    }
  }

  // A design of K_m on the listed vertices.
  void place_design(const IngredientSet& ing, const std::vector<Vertex>& vertices) {
    if (vertices.size() <= 1) return;
    auto it = ing.designs.find(vertices.size());
    if (it == ing.designs.end()) throw ConfigError("missing K_" + std::to_string(vertices.size()) + " design");
    if (it->second.host.order() != vertices.size() || !it->second.host.is_complete()) {
      throw ConfigError("ingredient " + it->second.id + " is not a design of K_" + std::to_string(vertices.size()));
    }
    place(it->second, vertices);
  }

  // A filler on the given target parts, matched to ingredient parts by size.
  void place_filler(const IngredientSet& ing, const std::vector<std::vector<Vertex>>& target) {
    std::vector<std::size_t> sizes;
    for (const auto& t : target) sizes.push_back(t.size());
    std::sort(sizes.begin(), sizes.end());
    auto it = ing.fillers.find(sizes);
    if (it == ing.fillers.end()) throw ConfigError("missing " + filler_name(sizes) + " filler");
    const HostSpec& h = it->second.host;
    if (signature(h) != sizes) throw ConfigError("ingredient " + it->second.id + " is not a " + filler_name(sizes));
    auto by_size = [](const auto& a, const auto& b) { return a.size() < b.size(); };
    auto src = h.parts();
    std::stable_sort(src.begin(), src.end(), by_size);
    auto dst = target;
    std::stable_sort(dst.begin(), dst.end(), by_size);
    std::vector<Vertex> map(h.order());
    for (std::size_t q = 0; q < src.size(); ++q)
      for (std::size_t j = 0; j < src[q].size(); ++j) map[src[q][j]] = dst[q][j];
    place(it->second, map);
  }

  Decomposition finish(const std::string& id, const std::string& source, const Catalog& catalog) const {
    Decomposition d;
    d.id = id;
    d.source = source;
    d.host = host;
    d.graph = graph;
    d.infinity = infinity;
    d.actions.push_back(identity_action("id"));
    for (const auto& c : copies) d.blocks.push_back({graph, "id", c});
    auto report = verify(d, catalog);
    if (!report.pass) {
      throw Error("assembled " + host.name() + " failed verification with " +
                  std::to_string(report.violations.size()) + " violations");
    }
    return d;
  }
};

std::string default_id(const std::string& graph, const HostSpec& h) {
  std::string name = h.name();
  name.erase(std::remove_if(name.begin(), name.end(), [](char c) { return c == '{' || c == '}' || c == '_'; }),
             name.end());
  return lower(graph) + "." + name;
}

const Catalog& catalog_of(const ConstructOptions& o) { return o.catalog ? *o.catalog : builtin_catalog(); }
const std::vector<Decomposition>& corpus_of(const ConstructOptions& o) {
  return o.corpus ? *o.corpus : builtin_corpus();
}

}  // namespace

Decomposition make_explicit(const Decomposition& d) {
  Decomposition out = d;
  out.actions = {identity_action("id")};
  out.blocks.clear();
  for (auto& c : explicit_copies(d)) out.blocks.push_back({d.graph, "id", std::move(c)});
  return out;
}

Decomposition wilson_fill(const Gdd& gdd, const std::vector<std::size_t>& weights, const std::string& graph,
                          const IngredientSet& ingredients, bool add_infinity, bool fill_groups,
                          const Catalog& catalog) {
  if (weights.size() != gdd.groups.size()) throw ConfigError("need one weight per GDD group");
  if (!validate_gdd(gdd).pass) throw ConfigError("GDD is not valid");
  if (add_infinity && !fill_groups) throw ConfigError("infinity needs filled groups");
  std::vector<std::vector<Vertex>> blown(gdd.points);
  std::vector<std::vector<Vertex>> group_vertices;
  std::vector<std::size_t> part_sizes;
  Vertex next = 0;
  for (std::size_t gi = 0; gi < gdd.groups.size(); ++gi) {
    if (weights[gi] == 0) throw ConfigError("zero weight");
    auto group = gdd.groups[gi];
    std::sort(group.begin(), group.end());
    std::vector<Vertex> all;
    for (Vertex p : group) {
      for (std::size_t j = 0; j < weights[gi]; ++j) blown[p].push_back(next++);
      all.insert(all.end(), blown[p].begin(), blown[p].end());
    }
    part_sizes.push_back(all.size());
    group_vertices.push_back(std::move(all));
  }
  const std::size_t n = next + (add_infinity ? 1 : 0);
  Assembly a{fill_groups ? HostSpec::complete(n) : HostSpec::multipartite(part_sizes), graph, add_infinity, {}};
  if (fill_groups) {
    for (auto g : group_vertices) {
      if (add_infinity) g.push_back(static_cast<Vertex>(n - 1));
      a.place_design(ingredients, g);
    }
  }
  for (auto b : gdd.blocks) {
    std::sort(b.begin(), b.end());
    std::vector<std::vector<Vertex>> target;
    for (Vertex p : b) target.push_back(blown[p]);
    a.place_filler(ingredients, target);
  }
  return a.finish(default_id(graph, a.host), "construct", catalog);
}

Decomposition fill_parts(const Decomposition& filler, const IngredientSet& ingredients, const Catalog& catalog) {
  if (filler.host.is_complete() || filler.host.part_count() < 2) {
    throw ConfigError(filler.id + " is not a multipartite filler");
  }
  Assembly a{HostSpec::complete(filler.host.order()), filler.graph, false, {}};
  for (const auto& part : filler.host.parts()) a.place_design(ingredients, part);
  std::vector<Vertex> id(filler.host.order());
  std::iota(id.begin(), id.end(), Vertex{0});
  a.place(filler, id);
  return a.finish(default_id(filler.graph, a.host), "construct", catalog);
}

Decomposition augment_common_point(const Decomposition& filler, const IngredientSet& ingredients,
                                   const Catalog& catalog) {
  if (filler.host.is_complete() || filler.host.part_count() < 2) {
    throw ConfigError(filler.id + " is not a multipartite filler");
  }
  const std::size_t n = filler.host.order() + 1;
  Assembly a{HostSpec::complete(n), filler.graph, true, {}};
  for (auto part : filler.host.parts()) {
    part.push_back(static_cast<Vertex>(n - 1));
    a.place_design(ingredients, part);
  }
  std::vector<Vertex> id(filler.host.order());
  std::iota(id.begin(), id.end(), Vertex{0});
  a.place(filler, id);
  return a.finish(default_id(filler.graph, a.host), "construct", catalog);
}

Decomposition build_filler_by_inflation(const Decomposition& base, std::size_t d, const Catalog& catalog) {
  if (base.host.is_complete()) throw ConfigError(base.id + " is not a multipartite filler");
  const std::size_t k = base.host.part_count();
  Gdd gdd = gdd_from_latin_squares(k, d);
  IngredientSet ing;
  ing.fillers.emplace(signature(base.host), base);
  return wilson_fill(gdd, base.host.part_sizes(), base.graph, ing, false, false, catalog);
}

std::string describe(const Plan& p) {
  std::ostringstream os;
  switch (p.kind) {
    case PlanKind::Trivial:
      return "trivial";
    case PlanKind::Ingredient:
      return "ingredient design";
    case PlanKind::External:
      return "external: " + p.note;
    case PlanKind::FillParts:
    case PlanKind::AugmentCommonPoint:
      os << (p.kind == PlanKind::FillParts ? "fill parts of " : "augment with a common point ")
         << HostSpec::multipartite(p.parts).name();
      return os.str();
    case PlanKind::Wilson:
      break;
  }
  os << p.gdd.k << "-GDD " << p.gdd.to_string() << ", weights";
  for (std::size_t w : p.weights) os << " " << w;
  if (p.infinity) os << ", plus infinity";
  return os.str();
}

namespace {

Plan wilson(std::size_t k, std::vector<std::pair<std::size_t, std::size_t>> classes, std::vector<std::size_t> weights,
            bool infinity) {
  Plan p;
  p.kind = PlanKind::Wilson;
  p.gdd.k = k;
  p.gdd.classes = std::move(classes);
  p.weights = std::move(weights);
  p.infinity = infinity;
  return p;
}

Plan ingredient() { return Plan{}; }

Plan external(std::string note) {
  Plan p;
  p.kind = PlanKind::External;
  p.note = std::move(note);
  return p;
}

Plan parts_plan(PlanKind kind, std::vector<std::size_t> parts) {
  Plan p;
  p.kind = kind;
  p.parts = std::move(parts);
  return p;
}

// n = 1 (mod 2e) from designs of order 2e+1 and 4e+1 and K_{e,e,e}.
Plan plan_2e(std::uint64_t e, std::uint64_t n) {
  const std::uint64_t s = (n - 1) / (2 * e);
  if (s <= 2) return ingredient();
  if (s == 5) return wilson(3, {{2, 3}, {4, 1}}, {e, e}, true);
  if (s == 8) return wilson(3, {{4, 4}}, {e}, true);
  if (s % 3 == 0 || s % 3 == 1) return wilson(3, {{2, s}}, {e}, true);
  return wilson(3, {{6, (s - 2) / 3}, {4, 1}}, {e, e}, true);
}

// n = 1 (mod e) from designs of order e+1, 2e+1, 4e+1 and K_{e/3,e/3,e/3}.
Plan plan_e_three(std::uint64_t e, std::uint64_t n) {
  const std::uint64_t s = (n - 1) / e;
  if (s <= 2 || s == 4) return ingredient();
  if (s % 2 == 0) return wilson(3, {{6, s / 2}}, {e / 3}, true);
  return wilson(3, {{3, s}}, {e / 3}, true);
}

// n = 1 (mod e) from designs of order e+1, 2e+1, K_{e,e,e} and
// K_{e/3,e/3,e/3,e/3}.
Plan plan_e_four(std::uint64_t e, std::uint64_t n) {
  const std::uint64_t s = (n - 1) / e, w = e / 3;
  switch (s) {
    case 0:
    case 1:
    case 2:
      return ingredient();
    case 3:
      return wilson(3, {{1, 3}}, {e}, true);
    case 4:
      return wilson(4, {{3, 4}}, {w}, true);
    case 5:
      return wilson(4, {{3, 5}}, {w}, true);
    case 6:
      return wilson(3, {{2, 3}}, {e}, true);
    case 7:
      return wilson(4, {{3, 5}, {6, 1}}, {w, w}, true);
    case 8:
      return wilson(4, {{3, 8}}, {w}, true);
    default:
      break;
  }
  if (s % 2 == 0) return wilson(4, {{6, s / 2}}, {w}, true);
  return wilson(4, {{6, s / 2}, {3, 1}}, {w, w}, true);
}

// v = 22, n = 22 (mod 33).
Plan plan_v22(std::uint64_t n) {
  if (n == 22 || n == 55 || n == 88) return ingredient();
  if (n == 121) return parts_plan(PlanKind::FillParts, {22, 22, 22, 55});
  if (n == 187) return parts_plan(PlanKind::FillParts, {22, 22, 22, 22, 22, 22, 55});
  if (n % 66 == 22) return wilson(4, {{2, n / 22}}, {11}, false);
  return wilson(4, {{2, (n - 55) / 22}, {5, 1}}, {11, 11}, false);
}

// v = 24, n = 64 (mod 72).
Plan plan_v24(std::uint64_t n) {
  switch (n) {
    case 64:
    case 136:
      return ingredient();
    case 208:
      return parts_plan(PlanKind::AugmentCommonPoint, {72, 72, 63});
    case 280:
      return wilson(4, {{3, 3}, {3, 1}}, {24, 21}, true);
    case 352:
      return wilson(4, {{3, 4}, {3, 1}}, {24, 21}, true);
    case 496:
      return wilson(4, {{3, 4}, {6, 1}, {3, 1}}, {24, 24, 21}, true);
    default:
      break;
  }
  if (n % 144 == 64) return wilson(4, {{6, (n - 64) / 144}, {3, 1}}, {24, 21}, true);
  return wilson(3, {{3, 2 * ((n - 136) / 144)}, {9, 1}}, {24, 15}, true);
}

enum class Rule { TwoE, EThree, EFour, V22, V24, FourWeight7, TwoWeight20, Dodecahedral, None };

struct Family {
  std::vector<std::string_view> graphs;
  std::uint64_t modulus;  // n = 1 (mod modulus) uses `one`
  Rule one;
  Rule other;
  std::uint64_t other_residue;  // 0: every other admissible residue
  std::string_view note;        // for orders no rule covers
};

const std::vector<Family>& families() {
  static const std::vector<Family> table{
      {{"TIETZE"}, 36, Rule::TwoE, Rule::None, 0, "n = 28 (mod 36) relies on an external construction"},
      {{"B11", "B12"}, 27, Rule::EThree, Rule::None, 0, ""},
      {{"S1", "S2", "S3", "S4", "S5", "S6"}, 0, Rule::None, Rule::Dodecahedral, 0,
       "relies on external constructions for cubic graphs on 20 vertices"},
      {{"L1",  "L2",  "L3",  "L4",  "L5",  "L6",  "L7",  "L8",  "L9",  "L10",
        "L11", "L12", "L13", "L14", "L15", "L16", "L17", "L18", "L19", "L20"},
       33, Rule::EFour, Rule::V22, 0, ""},
      {{"GS3"}, 72, Rule::TwoE, Rule::V24, 0, ""},
      {{"CS1", "CS2", "B21", "B22"}, 39, Rule::EFour, Rule::None, 0, "only n = 1 (mod 39) is resolved"},
      {{"FJ7"}, 84, Rule::TwoE, Rule::FourWeight7, 28, "only n = 1, 28 (mod 84) are resolved"},
      {{"DS"}, 45, Rule::EThree, Rule::None, 0, "only n = 1 (mod 45) is resolved"},
      {{"B31", "B32"}, 51, Rule::EFour, Rule::None, 0, "only n = 1 (mod 51) is resolved"},
      {{"Z"}, 108, Rule::TwoE, Rule::None, 0, "only n = 1 (mod 108) is resolved"},
      {{"GS5"}, 120, Rule::TwoE, Rule::TwoWeight20, 40, "only n = 1, 40 (mod 120) are resolved"},
      {{"SZE", "WAT"}, 75, Rule::EFour, Rule::None, 0, "only n = 1 (mod 75) is resolved"},
  };
  return table;
}

}  // namespace

Plan plan_for(const CatalogGraph& g, std::uint64_t n) {
  const int v = static_cast<int>(g.v());
  if (!is_admissible_order(v, n, g.spectrum ? g.spectrum : known_spectrum(v))) {
    auto a = admissible_residues(v);
    auto sp = g.spectrum ? g.spectrum : known_spectrum(v);
    throw InadmissibleError("inadmissible: " + g.name + " has no design of order " + std::to_string(n) + " (" +
                            format_admissibility(a, sp ? sp->excluded : std::vector<int>{}) + ")");
  }
  if (n == 1) return parts_plan(PlanKind::Trivial, {});
  const std::uint64_t e = g.e();
  for (const auto& f : families()) {
    if (std::find(f.graphs.begin(), f.graphs.end(), g.name) == f.graphs.end()) continue;
    Rule rule = Rule::None;
    if (f.modulus != 0 && n % f.modulus == 1) {
      rule = f.one;
    } else if (f.other_residue == 0 || n % f.modulus == f.other_residue) {
      rule = f.other;
    }
    switch (rule) {
      case Rule::TwoE:
        return plan_2e(e, n);
      case Rule::EThree:
        return plan_e_three(e, n);
      case Rule::EFour:
        return plan_e_four(e, n);
      case Rule::V22:
        return plan_v22(n);
      case Rule::V24:
        return plan_v24(n);
      case Rule::FourWeight7:
        if (n == 28) return ingredient();
        return wilson(4, {{4, n / 28}}, {7}, false);
      case Rule::TwoWeight20:
        if (n == 40) return ingredient();
        if (n == 160) return parts_plan(PlanKind::FillParts, {40, 40, 40, 40});
        return wilson(4, {{2, n / 40}}, {20}, false);
      case Rule::Dodecahedral:
        if (n == 340) return wilson(4, {{4, 6}, {10, 1}}, {10, 10}, false);
        return external(std::string(f.note));
      case Rule::None:
        return external(std::string(f.note));
    }
  }
  return external("no recipe for " + g.name);
}

namespace {

class Builder {
 public:
  Builder(const std::string& graph, const ConstructOptions& o)
      : graph_(graph), catalog_(catalog_of(o)), corpus_(corpus_of(o)), options_(o) {
    catalog_.at(graph);
  }

  const Decomposition& design(std::uint64_t n) {
    if (auto it = designs_.find(n); it != designs_.end()) return it->second;
    return designs_.emplace(n, build_design(n)).first->second;
  }

  const Decomposition& filler(std::vector<std::size_t> parts) {
    std::sort(parts.begin(), parts.end());
    if (auto it = fillers_.find(parts); it != fillers_.end()) return it->second;
    return fillers_.emplace(parts, build_filler(parts)).first->second;
  }

 private:
  const Decomposition* from_corpus(const std::function<bool(const HostSpec&)>& match) const {
    for (const auto& d : corpus_) {
      if (d.graph == graph_ && match(d.host)) return &d;
    }
    return nullptr;
  }

  Decomposition build_design(std::uint64_t n) {
    const auto& g = catalog_.at(graph_);
    Plan plan = plan_for(g, n);
    if (const auto* d = from_corpus([n](const HostSpec& h) { return h.is_complete() && h.order() == n; })) {
      return *d;
    }
    const std::string target = graph_ + " design of order " + std::to_string(n);
    switch (plan.kind) {
      case PlanKind::Trivial: {
        Decomposition d;
        d.id = lower(graph_) + ".K1";
        d.source = "construct";
        d.host = HostSpec::complete(1);
        d.graph = graph_;
        d.actions.push_back(identity_action("id"));
        return d;
      }
      case PlanKind::Ingredient:
        throw UnreachableError("unreachable: " + target + " needs a K_" + std::to_string(n) +
                               " ingredient design, which the corpus does not contain");
      case PlanKind::External:
        throw UnreachableError("unreachable: " + target + ": " + plan.note);
      case PlanKind::FillParts:
      case PlanKind::AugmentCommonPoint: {
        const bool aug = plan.kind == PlanKind::AugmentCommonPoint;
        const Decomposition& f = need_filler(plan.parts, target);
        IngredientSet ing;
        for (std::size_t s : f.host.part_sizes()) add_design(ing, s + (aug ? 1 : 0), target);
        return aug ? augment_common_point(f, ing, catalog_) : fill_parts(f, ing, catalog_);
      }
      case PlanKind::Wilson:
        break;
    }
    IngredientSet ing;
    std::vector<std::size_t> group_weights;
    for (std::size_t c = 0; c < plan.gdd.classes.size(); ++c) {
      auto [size, count] = plan.gdd.classes[c];
      group_weights.insert(group_weights.end(), count, plan.weights[c]);
      if (size * plan.weights[c] + (plan.infinity ? 1 : 0) > 1) {
        add_design(ing, size * plan.weights[c] + (plan.infinity ? 1 : 0), target);
      }
    }
    Gdd gdd;
    try {
      gdd = gdd_provider(plan.gdd, options_.gdd);
    } catch (const UnreachableError& err) {
      throw UnreachableError("unreachable: " + target + " needs a " + std::to_string(plan.gdd.k) + "-GDD of type " +
                             plan.gdd.to_string() + " (" + err.what() + ")");
    }
    for (const auto& b : gdd.blocks) {
      std::vector<std::size_t> sig;
      for (Vertex p : b) {
        std::size_t gi = 0;
        while (std::find(gdd.groups[gi].begin(), gdd.groups[gi].end(), p) == gdd.groups[gi].end()) ++gi;
        sig.push_back(group_weights[gi]);
      }
      std::sort(sig.begin(), sig.end());
      if (!ing.fillers.count(sig)) ing.fillers.emplace(sig, need_filler(sig, target));
    }
    return wilson_fill(gdd, group_weights, graph_, ing, plan.infinity, true, catalog_);
  }

  void add_design(IngredientSet& ing, std::uint64_t n, const std::string& target) {
    if (ing.designs.count(n)) return;
    try {
      ing.designs.emplace(n, design(n));
    } catch (const InadmissibleError& err) {
      throw UnreachableError("unreachable: " + target + " needs a K_" + std::to_string(n) + " design (" + err.what() +
                             ")");
    } catch (const UnreachableError& err) {
      throw UnreachableError("unreachable: " + target + " needs a K_" + std::to_string(n) + " design (" + err.what() +
                             ")");
    }
  }

  const Decomposition& need_filler(const std::vector<std::size_t>& parts, const std::string& target) {
    try {
      return filler(parts);
    } catch (const UnreachableError& err) {
      throw UnreachableError("unreachable: " + target + " needs a " + filler_name(parts) + " filler (" + err.what() +
                             ")");
    }
  }

  Decomposition build_filler(const std::vector<std::size_t>& parts) {
    if (const auto* d = from_corpus([&](const HostSpec& h) { return !h.is_complete() && signature(h) == parts; })) {
      return *d;
    }
    std::size_t common = 0;
    for (std::size_t s : parts) common = std::gcd(common, s);
    for (std::size_t d = 2; d <= common; ++d) {
      if (common % d != 0 || mols_capacity_for(parts.size(), d) == false) continue;
      std::vector<std::size_t> smaller;
      for (std::size_t s : parts) smaller.push_back(s / d);
      try {
        return build_filler_by_inflation(filler(smaller), d, catalog_);
      } catch (const UnreachableError&) {
        continue;
      }
    }
    throw UnreachableError("no " + graph_ + " decomposition of " + filler_name(parts) +
                           " in the corpus or by inflation");
  }

  static bool mols_capacity_for(std::size_t k, std::size_t d) {
    try {
      gdd_from_latin_squares(k, d);
      return true;
    } catch (const UnreachableError&) {
      return false;
    }
  }

  std::string graph_;
  const Catalog& catalog_;
  const std::vector<Decomposition>& corpus_;
  const ConstructOptions& options_;
  std::map<std::uint64_t, Decomposition> designs_;
  std::map<std::vector<std::size_t>, Decomposition> fillers_;
};

}  // namespace

Decomposition construct(const std::string& graph, std::uint64_t n, const ConstructOptions& options) {
  Builder b(graph, options);
  Decomposition d = make_explicit(b.design(n));
  d.id = lower(graph) + ".K" + std::to_string(n);
  d.source = "construct";
  auto report = verify(d, catalog_of(options));
  if (!report.pass) throw Error("constructed " + d.id + " failed verification");
  return d;
}

Decomposition construct_filler(const std::string& graph, std::vector<std::size_t> parts,
                               const ConstructOptions& options) {
  if (parts.size() < 2) throw ConfigError("a filler needs at least two parts");
  Builder b(graph, options);
  Decomposition d = make_explicit(b.filler(std::move(parts)));
  auto report = verify(d, catalog_of(options));
  if (!report.pass) throw Error("constructed " + d.id + " failed verification");
  return d;
}

}  // namespace snark
