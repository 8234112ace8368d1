#include "lcsc/cocycle.hpp"

#include <algorithm>
#include <numeric>

namespace lcsc {

static void finish(const Category& c, Cocycle& eta) {
  eta.image = eta.values;
  std::sort(eta.image.begin(), eta.image.end());
  eta.image.erase(std::unique(eta.image.begin(), eta.image.end()), eta.image.end());
  if (eta.target.is_finite()) {
    eta.nondegenerate = eta.target.is_whole(eta.target.closure(eta.image));
  } else if (eta.target.rank() == 0) {
    eta.nondegenerate = true;
  } else if (eta.target.rank() == 1) {
    // subgroup of Z generated by the exponent sums
    int64_t d = 0;
    for (int v : eta.image) {
      auto e = exponent_sums(eta.target.word(v), 1);
      d = std::gcd(d, e[0]);
    }
    eta.nondegenerate = (d == 1 || d == -1);
  } else {
    eta.nondegenerate = std::nullopt;  // subgroup membership in free groups is out of scope
  }
  (void)c;
}

Cocycle validate_cocycle(const Category& c, const Group& target, std::vector<int> values) {
  if ((int)values.size() != c.num_morphisms())
    fail(Errc::ValidationError, "cocycle must assign a value to every morphism");
  for (int v = 0; v < c.num_vertices(); ++v)
    if (values[c.identity(v)] != target.unit())
      fail(Errc::VertexNotUnit, "vertex '" + c.vertex_name(v) + "'");
  int n = c.num_morphisms();
  for (int f = 0; f < n; ++f)
    for (int g = 0; g < n; ++g) {
      int32_t fg = c.compose_raw(f, g);
      if (fg < 0) continue;
      if (values[fg] != target.mul(values[f], values[g]))
        fail(Errc::NotFunctorial,
             "(" + c.morphism_name(f) + ", " + c.morphism_name(g) + ")");
    }
  Cocycle eta{target, std::move(values), std::nullopt, {}};
  finish(c, eta);
  return eta;
}

Cocycle extend_cocycle_on_generators(const Category& c, const Group& target,
                                     const std::vector<int>& generator_values) {
  const auto& gens = c.generators();
  if (gens.empty() && !c.is_explicit())
    fail(Errc::BudgetedUnsupported, "graded view has no declared generators");
  if (generator_values.size() != gens.size())
    fail(Errc::ValidationError, "one value per declared generator expected");
  std::vector<int> values(c.num_morphisms(), -1);
  for (int v = 0; v < c.num_vertices(); ++v) values[v] = target.unit();
  for (size_t i = 0; i < gens.size(); ++i) values[gens[i]] = generator_values[i];
  // peel a generator off the left of each unassigned morphism
  bool progress = true;
  while (progress) {
    progress = false;
    for (int m = 0; m < c.num_morphisms(); ++m) {
      if (values[m] >= 0) continue;
      for (size_t i = 0; i < gens.size() && values[m] < 0; ++i) {
        int e = gens[i];
        for (int rest : c.with_rng(c.src(e))) {
          if (values[rest] < 0) continue;
          if (c.compose_raw(e, rest) == m) {
            values[m] = target.mul(generator_values[i], values[rest]);
            progress = true;
            break;
          }
        }
      }
    }
  }
  for (int m = 0; m < c.num_morphisms(); ++m)
    if (values[m] < 0)
      fail(Errc::ValidationError,
           "morphism '" + c.morphism_name(m) + "' does not factor through the declared generators");
  return validate_cocycle(c, target, std::move(values));
}

Cocycle trivial_cocycle(const Category& c, const Group& target) {
  return validate_cocycle(c, target, std::vector<int>(c.num_morphisms(), target.unit()));
}

Cocycle coboundary(const Category& c, const Group& target, const std::vector<int>& tau) {
  std::vector<int> values(c.num_morphisms());
  for (int m = 0; m < c.num_morphisms(); ++m)
    values[m] = target.mul(tau[c.rng(m)], target.inv(tau[c.src(m)]));
  return validate_cocycle(c, target, std::move(values));
}

}  // namespace lcsc
