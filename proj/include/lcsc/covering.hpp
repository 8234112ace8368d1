#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lcsc/category.hpp"
#include "lcsc/cocycle.hpp"
#include "lcsc/functor.hpp"
#include "lcsc/group.hpp"
#include "lcsc/groupoid.hpp"

namespace lcsc {

struct CoveringCheck {
  bool covering = false;
  std::string witness;  // failing vertex and direction, when not a covering
};
// p must be a functor D -> C (NotAFunctor otherwise); checks surjectivity and
// that both restrictions Dv -> Cp(v) and vD -> p(v)C are bijections.
CoveringCheck is_covering(const Category& d, const Category& c, const CatFunctor& p);

// An action of a category on a vertex-indexed family of sets: point i lives
// over vertex fiber_of[i], and each morphism m maps V_{src(m)} -> V_{rng(m)}
// bijectively via act[m].
struct CatAction {
  std::vector<std::string> point_names;
  std::vector<int> fiber_of;              // point -> vertex
  std::vector<std::vector<int>> act;      // [morphism][point] -> point (-1 off-fiber)
};
void validate_cat_action(const Category& c, const CatAction& a);

// The transformation category C*V with r(m,v) = (r(m), m.v) and
// (m, k.w)(k, w) = (mk, w).
struct TransformationCategory {
  Category cat;
  std::vector<int> morph_of_pair;  // (m * npoints + point) -> morphism, -1 when off-fiber
  std::vector<int> base, point;    // per product morphism
};
TransformationCategory transformation_category(const Category& c, const CatAction& a);

// The cocycle action on C0 x G: m.(src(m), g) = (rng(m), eta(m) g).
CatAction cocycle_action(const Category& c, const Cocycle& eta);

struct OrbitsResult {
  std::vector<std::vector<int>> orbits;  // point partition, by least member
  bool transitive = false;
  // stabilizers per point, as morphism sets of the isotropy at the point's
  // fiber vertex (only for groupoid inputs)
  std::vector<std::vector<int>> stabilizers;
};
OrbitsResult orbits_and_stabilizers(const Category& c, const CatAction& a);

struct DeckGroup {
  std::vector<CatFunctor> elements;  // elements[0] is the identity
  Group group;                       // composition table, names d0, d1, ...
};
// All automorphisms f of D with p o f = p, by exhaustive search over root
// images with propagation along the covering bijections.
DeckGroup deck_transformations(const Category& d, const Category& c, const CatFunctor& p,
                               long long budget = 200000);

}  // namespace lcsc
