#pragma once

#include <optional>
#include <vector>

#include "lcsc/category.hpp"
#include "lcsc/group.hpp"

namespace lcsc {

// A group-valued functor on a category: value(fg) = value(f)*value(g) and
// value(v) = unit. `nondegenerate` reports whether the image generates the
// target; it is left unset when that is not decidable (free targets of rank
// above one).
struct Cocycle {
  Group target;
  std::vector<int> values;  // per morphism index
  std::optional<bool> nondegenerate;
  std::vector<int> image;  // distinct values, sorted

  int operator()(int m) const { return values[m]; }
};

// Checks functoriality on every composable pair of the window and the vertex
// law, then computes the image and the nondegeneracy flag.
Cocycle validate_cocycle(const Category& c, const Group& target, std::vector<int> values);

// Values given on the declared generators of a graded view, extended
// multiplicatively along factorizations.
Cocycle extend_cocycle_on_generators(const Category& c, const Group& target,
                                     const std::vector<int>& generator_values);

// The trivial cocycle into the given group.
Cocycle trivial_cocycle(const Category& c, const Group& target);

// Coboundary of a vertex potential: value(m) = tau[rng(m)] * tau[src(m)]^-1.
Cocycle coboundary(const Category& c, const Group& target, const std::vector<int>& tau);

}  // namespace lcsc
