#include "lcsc/skew.hpp"

#include <algorithm>

#include "lcsc/actions.hpp"
#include "lcsc/testing.hpp"
#include "lcsc/zappa.hpp"

namespace lcsc {

namespace testing {
static Mutant g_mutant = Mutant::None;
Mutant active_mutant() { return g_mutant; }
void set_mutant(Mutant m) { g_mutant = m; }
}  // namespace testing

SkewProduct skew_product(const Category& c, const Cocycle& eta) {
  if (!eta.target.is_finite())
    fail(Errc::BudgetedUnsupported, "explicit skew products need a finite group");
  if ((int)eta.values.size() != c.num_morphisms())
    fail(Errc::ValidationError, "cocycle does not match the category");
  const Group& g = eta.target;
  int ng = g.order();
  int n = c.num_morphisms();
  bool flipped = testing::active_mutant() == testing::Mutant::SkewComposabilityFlipped;

  CategoryTable t;
  for (int v = 0; v < c.num_vertices(); ++v)
    for (int x = 0; x < ng; ++x)
      t.add_vertex(c.vertex_name(v) + "⋉" + g.elem_name(x),
                   c.morphism_name(c.identity(v)) + "⋉" + g.elem_name(x));
  auto pair = [&](int m, int x) { return m * ng + x; };
  for (int m = c.num_vertices(); m < n; ++m)
    for (int x = 0; x < ng; ++x) {
      int made = t.add_morphism(c.morphism_name(m) + "⋉" + g.elem_name(x),
                                pair(c.src(m), x), pair(c.rng(m), g.mul(eta(m), x)));
      if (made != pair(m, x)) fail(Errc::VerificationFailed, "pair indexing drifted");
    }
  for (int f = 0; f < n; ++f)
    for (int k : c.with_rng(c.src(f))) {
      int32_t fk = c.compose_raw(f, k);
      if (fk == Category::kNotComposable) continue;
      for (int h = 0; h < ng; ++h) {
        int gg = g.mul(eta(flipped ? f : k), h);
        if (fk == Category::kOverBudget)
          t.set_over_budget(pair(f, gg), pair(k, h));
        else
          t.set_compose(pair(f, gg), pair(k, h), pair(fk, h));
      }
    }
  if (!c.is_explicit()) {
    std::vector<int> grades, gens;
    for (int m = c.num_vertices(); m < n; ++m)
      for (int x = 0; x < ng; ++x) grades.push_back(c.grade(m));
    for (int e : c.generators())
      for (int x = 0; x < ng; ++x) gens.push_back(pair(e, x));
    t.make_graded(c.budget(), std::move(grades), std::move(gens), c.prefix_decidable());
  }

  SkewProduct sp;
  sp.base = c;
  sp.eta = eta;
  sp.cat = std::move(t).finalize();
  require_left_cancellative(sp.cat);
  sp.projection.vmap.resize(sp.cat.num_vertices());
  sp.projection.mmap.resize(sp.cat.num_morphisms());
  for (int v = 0; v < sp.cat.num_vertices(); ++v) sp.projection.vmap[v] = v / ng;
  for (int m = 0; m < sp.cat.num_morphisms(); ++m) sp.projection.mmap[m] = m / ng;
  require_functor(sp.cat, sp.base, sp.projection);
  return sp;
}

std::vector<int> skew_join_formula(const SkewProduct& sp, int p, int q) {
  const Group& g = sp.eta.target;
  int a = sp.base_of(p), b = sp.base_of(q);
  int ga = g.mul(sp.eta(a), sp.elem_of(p)), gb = g.mul(sp.eta(b), sp.elem_of(q));
  if (ga != gb) return {};
  std::vector<int> out;
  for (int d : join(sp.base, a, b)) out.push_back(sp.pair(d, g.mul(g.inv(sp.eta(d)), ga)));
  return out;
}

std::vector<int> skew_join_check(const SkewProduct& sp, int p, int q) {
  auto formula = skew_join_formula(sp, p, q);
  auto direct = join(sp.cat, p, q);
  auto indep = is_independent(sp.cat, formula);
  if (!indep.independent)
    fail(Errc::VerificationFailed, "skew join formula produced a dependent set");
  // compare as ideal unions, then canonicalize the formula side
  auto ideals = ideal_table(sp.cat);
  Bitset lhs(sp.cat.num_morphisms()), rhs(sp.cat.num_morphisms());
  for (int m : formula) lhs |= ideals[m];
  for (int m : direct) rhs |= ideals[m];
  if (lhs != rhs) fail(Errc::VerificationFailed, "skew join formula does not match the direct join");
  if (lhs.any()) {
    Bitset members(sp.cat.num_morphisms());
    for (int m : formula) members |= ideals[m];
    auto canon = independent_generators(sp.cat, ideals, members);
    if (canon != direct)
      fail(Errc::VerificationFailed, "canonical forms of the two joins differ");
  }
  return formula;
}

std::vector<std::pair<int, int>> skew_join_pairs(const Category& c, const Cocycle& eta,
                                                 std::pair<int, int> p, std::pair<int, int> q) {
  const Group& g = eta.target;
  auto [a, ga] = p;
  auto [b, gb] = q;
  int ra = g.mul(eta(a), ga), rb = g.mul(eta(b), gb);
  if (ra != rb) return {};
  std::vector<std::pair<int, int>> out;
  for (int d : join(c, a, b)) out.push_back({d, g.mul(g.inv(eta(d)), ra)});
  return out;
}

GroupAction skew_group_action(const SkewProduct& sp) {
  const Group& g = sp.eta.target;
  int ng = g.order();
  GroupAction a;
  a.group = g;
  a.act.assign(ng, std::vector<int>(sp.cat.num_morphisms()));
  for (int x = 0; x < ng; ++x)
    for (int m = 0; m < sp.cat.num_morphisms(); ++m)
      a.act[x][m] = sp.pair(sp.base_of(m), g.mul(sp.elem_of(m), g.inv(x)));
  return validate_action(sp.cat, g, std::move(a.act));
}

Category semidirect_product(const Category& d, const GroupAction& action) {
  CategorySystem sys;
  sys.cat = d;
  sys.group = action.group;
  sys.act = action.act;
  sys.phi.assign(action.group.order(), std::vector<int>(d.num_morphisms()));
  for (int h = 0; h < action.group.order(); ++h)
    for (int m = 0; m < d.num_morphisms(); ++m) sys.phi[h][m] = h;
  return zs_product(sys).cat;
}

}  // namespace lcsc
