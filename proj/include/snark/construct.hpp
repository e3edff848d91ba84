#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "snark/catalog.hpp"
#include "snark/gdd.hpp"
#include "snark/verify.hpp"

namespace snark {

// Ingredient designs of K_n keyed by n, and multipartite fillers keyed by
// their sorted part sizes.
struct IngredientSet {
  std::map<std::size_t, Decomposition> designs;
  std::map<std::vector<std::size_t>, Decomposition> fillers;
};

// Every point of group i becomes weights[i] vertices. Groups occupy
// contiguous vertex ranges in group order and infinity, if added, is last.
// Each group (plus infinity) receives a design when fill_groups is set;
// otherwise the result decomposes the complete multipartite graph whose
// parts are the inflated groups. Each block receives the filler whose part
// sizes are the weights of its points. The result is verified.
Decomposition wilson_fill(const Gdd& gdd, const std::vector<std::size_t>& weights, const std::string& graph,
                          const IngredientSet& ingredients, bool add_infinity, bool fill_groups,
                          const Catalog& catalog);

// Lays a design on every part of a multipartite filler.
Decomposition fill_parts(const Decomposition& filler, const IngredientSet& ingredients, const Catalog& catalog);

// Adds a common point to every part of a multipartite filler and lays a
// design of the augmented order on each.
Decomposition augment_common_point(const Decomposition& filler, const IngredientSet& ingredients,
                                   const Catalog& catalog);

// K_{d s1, ..., d sk} from K_{s1, ..., sk} and a k-GDD of type d^k built
// from Latin squares.
Decomposition build_filler_by_inflation(const Decomposition& base, std::size_t d, const Catalog& catalog);

enum class PlanKind { Trivial, Ingredient, Wilson, FillParts, AugmentCommonPoint, External };

struct Plan {
  PlanKind kind = PlanKind::Ingredient;
  GddType gdd;                       // Wilson
  std::vector<std::size_t> weights;  // Wilson: one per GDD class
  bool infinity = false;             // Wilson
  std::vector<std::size_t> parts;    // FillParts, AugmentCommonPoint
  std::string note;                  // External: what is missing
};

std::string describe(const Plan& p);

// The recipe-table entry for graph g at order n. Throws InadmissibleError
// when n fails the divisibility conditions or is an excluded order.
Plan plan_for(const CatalogGraph& g, std::uint64_t n);

struct ConstructOptions {
  const Catalog* catalog = nullptr;                // builtin when null
  const std::vector<Decomposition>* corpus = nullptr;  // builtin when null
  GddProviderOptions gdd;
};

// A verified design of K_n with explicit copies under an identity action.
// Corpus designs pass through. Throws InadmissibleError or UnreachableError.
Decomposition construct(const std::string& graph, std::uint64_t n, const ConstructOptions& options = {});

// Same, for a multipartite filler with the given part sizes.
Decomposition construct_filler(const std::string& graph, std::vector<std::size_t> parts,
                               const ConstructOptions& options = {});

// Rewrites d with every copy listed under a single identity action.
Decomposition make_explicit(const Decomposition& d);

}  // namespace snark
