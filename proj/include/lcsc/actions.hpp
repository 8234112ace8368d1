#pragma once

#include <optional>
#include <vector>

#include "lcsc/category.hpp"
#include "lcsc/cocycle.hpp"
#include "lcsc/functor.hpp"
#include "lcsc/skew.hpp"

namespace lcsc {

// An action of a finite group on a category by category automorphisms.
struct GroupAction {
  Group group;
  std::vector<std::vector<int>> act;  // [element][morphism] -> morphism

  int vertex_image(const Category& c, int g, int v) const { return act[g][c.identity(v)]; }
};

// Checks that every act[g] is a category automorphism and that the tables
// form a group action.
GroupAction validate_action(const Category& d, Group g, std::vector<std::vector<int>> act);

struct FreenessResult {
  bool free = true;
  std::optional<std::pair<int, int>> witness;  // (g, morphism) with g != e, g.m == m
};
FreenessResult freeness(const Category& d, const GroupAction& a);

struct QuotientResult {
  Category quotient;
  CatFunctor qmap;                 // d -> quotient
  std::vector<int> vertex_section; // quotient vertex -> representative vertex of d
  std::vector<int> morphism_rep;   // quotient morphism -> least representative in d
};

// Quotient by a free action; left cancellativity of d is re-verified on the
// quotient. Throws NotFree when the action is not free.
QuotientResult quotient_category(const Category& d, const GroupAction& a);

// Both sides of the quotient ideal-intersection identity
//   [l](D/G) n [m](D/G) = U_t q(lD n (t.m)D),
// computed independently and compared; returns the common set of quotient
// morphisms.
std::vector<int> quotient_ideal_intersection(const Category& d, const GroupAction& a,
                                             const QuotientResult& q, int lam, int mu);

struct GrossTucker {
  QuotientResult quotient;
  Cocycle eta;        // on the quotient
  SkewProduct skew;   // (D/G) x_eta G
  CatFunctor rho;     // skew.cat -> D, verified equivariant isomorphism
};

// Constructive Gross-Tucker: reconstructs D as a skew product of D/G. The
// vertex section defaults to the lexicographically least vertex per orbit;
// pass `section` (quotient-vertex -> D-vertex) to override.
GrossTucker gross_tucker(const Category& d, const GroupAction& a,
                         const std::optional<std::vector<int>>& section = std::nullopt);

}  // namespace lcsc
