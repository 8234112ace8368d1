#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "lcsc/category.hpp"
#include "lcsc/util.hpp"

namespace lcsc {

// Principal right ideal aC = {a*g : g composable} together with a itself.
// On a graded view the window part of the ideal is returned; this is exact
// information for prefix-decidable views.
std::vector<int> principal_ideal(const Category& c, int a);
Bitset principal_ideal_bits(const Category& c, int a);

// All principal ideals at once, for callers that scan many pairs.
std::vector<Bitset> ideal_table(const Category& c);

// A canonical independent set L with LC = aC n bC: one representative per
// ~ class, the lexicographically least morphism id. Empty when the ideals
// are disjoint.
std::vector<int> join(const Category& c, int a, int b);
std::vector<int> join(const Category& c, int a, int b, const std::vector<Bitset>& ideals);
std::vector<int> join_family(const Category& c, const std::vector<int>& f);

// Canonical independent generating set of an arbitrary union-of-ideals given
// by its member set.
std::vector<int> independent_generators(const Category& c, const std::vector<Bitset>& ideals,
                                        const Bitset& s);

struct ExhaustiveResult {
  bool exhaustive = false;
  std::optional<int> witness;  // a failing alpha in vC
};
ExhaustiveResult is_exhaustive(const Category& c, int v, const std::vector<int>& f);

struct IndependentResult {
  bool independent = true;
  std::optional<std::pair<int, int>> witness;  // (alpha, beta) with alpha in beta*C, alpha != beta
};
IndependentResult is_independent(const Category& c, const std::vector<int>& f);

}  // namespace lcsc
