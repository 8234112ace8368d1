#pragma once

#include <vector>

#include "lcsc/alignment.hpp"
#include "lcsc/category.hpp"
#include "lcsc/cocycle.hpp"
#include "lcsc/functor.hpp"

namespace lcsc {

struct GroupAction;  // actions.hpp

// The skew product C x_eta G: morphisms are pairs (m, g) with
//   s(m,g) = (s(m), g),  r(m,g) = (r(m), eta(m)g),
//   (m,g)(k,h) = (mk, h)  iff  s(m) = r(k) and g = eta(k)h.
// Pair (m,g) has index m*|G| + g, so vertex (v,g) has index v*|G| + g and
// the product's identities stay in front.
struct SkewProduct {
  Category base;
  Cocycle eta;
  Category cat;
  CatFunctor projection;  // cat -> base, (m,g) -> m

  int group_order() const { return (int)eta.target.order(); }
  int pair(int m, int g) const { return m * group_order() + g; }
  int base_of(int p) const { return p / group_order(); }
  int elem_of(int p) const { return p % group_order(); }
};

// Builds and fully validates the product (category axioms and left
// cancellativity are re-verified). The cocycle target must be a table group.
SkewProduct skew_product(const Category& c, const Cocycle& eta);

// Right-hand side of the skew join formula:
//   (a,g) v (b,h) = { (d, eta(d)^-1 eta(a) g) : d in a v b }   when eta(a)g = eta(b)h
// and empty otherwise.
std::vector<int> skew_join_formula(const SkewProduct& sp, int p, int q);

// Evaluates the formula and asserts it generates the same ideal union as the
// join computed directly inside the product; returns the formula set.
std::vector<int> skew_join_check(const SkewProduct& sp, int p, int q);

// Formula-only evaluation on pairs (morphism, group element), without
// materializing the product. This is the entry point for symbolic (free)
// cocycle targets, where full enumeration is impossible.
std::vector<std::pair<int, int>> skew_join_pairs(const Category& c, const Cocycle& eta,
                                                 std::pair<int, int> p, std::pair<int, int> q);

// The canonical free action g.(m,h) = (m, h g^-1) on the skew product.
GroupAction skew_group_action(const SkewProduct& sp);

// Semidirect product D x| G for an action by automorphisms: the Zappa-Szep
// product with the trivial category cocycle phi(g, m) = g.
Category semidirect_product(const Category& d, const GroupAction& action);

}  // namespace lcsc
