#include "lcsc/suite.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include <nlohmann/json.hpp>

#include "lcsc/alignment.hpp"
#include "lcsc/covering.hpp"
#include "lcsc/fixtures.hpp"
#include "lcsc/groupoid.hpp"
#include "lcsc/io.hpp"
#include "lcsc/skew.hpp"
#include "lcsc/zappa.hpp"

namespace lcsc {

namespace {

struct Check {
  bool ok = true;
  std::string what;
};

#define REQUIRE_PROP(cond, msg)            \
  do {                                     \
    if (!(cond)) return Check{false, msg}; \
  } while (0)

using FixtureFn = std::function<Check(Rng&, int)>;

SuiteResult drive(const std::string& id, const std::string& description, const SuiteConfig& cfg,
                  uint64_t salt, int fixtures_at_full_scale, const FixtureFn& fn) {
  SuiteResult r;
  r.id = id;
  r.description = description;
  int n = cfg.scale <= 0 ? 0 : std::max(1, fixtures_at_full_scale * cfg.scale / 100);
  Rng rng(cfg.seed * 0x9e3779b97f4a7c15ull + salt);
  for (int i = 0; i < n; ++i) {
    Rng sub = rng.fork();
    ++r.fixtures;
    Check c;
    try {
      c = fn(sub, i);
    } catch (const Error& e) {
      c = {false, e.what()};
    }
    if (c.ok) {
      ++r.passed;
    } else {
      ++r.failed;
      if (r.counterexample.empty())
        r.counterexample = "fixture " + std::to_string(i) + ": " + c.what;
    }
  }
  return r;
}

int group_order_fitting(int base_morphisms, int max_group, int max_total) {
  int cap = std::max(1, std::min(max_group, max_total / std::max(1, base_morphisms)));
  return cap;
}

// ---------------------------------------------------------------- cat-core

Check cat_core_fixture(Rng& rng, int, const SuiteConfig& cfg) {
  LcFixture f = random_lc_category(rng, cfg.max_morphisms, false);
  const Category& c = f.cat;

  // serialization fixed point
  std::string s1 = category_to_json(c);
  Category c2 = category_from_json(s1);
  REQUIRE_PROP(category_to_json(c2) == s1, "serialized form is not a fixed point");

  auto inv = invertibles_and_equivalence(c);
  int n = c.num_morphisms();
  // the relation alpha ~ beta iff alpha = beta*gamma for invertible gamma
  std::vector<std::vector<char>> rel(n, std::vector<char>(n, 0));
  for (int b = 0; b < n; ++b)
    for (int g : inv.invertibles)
      if (c.src(b) == c.rng(g)) rel[*c.compose(b, g)][b] = 1;
  for (int a = 0; a < n; ++a) REQUIRE_PROP(rel[a][a], "~ is not reflexive");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      REQUIRE_PROP(rel[a][b] == rel[b][a], "~ is not symmetric");
      REQUIRE_PROP(rel[a][b] == (inv.class_of[a] == inv.class_of[b]),
                   "~ classes do not match the relation");
      if (rel[a][b])
        for (int d = 0; d < n; ++d)
          if (rel[b][d]) REQUIRE_PROP(rel[a][d], "~ is not transitive");
    }

  for (int g : inv.invertibles) {
    int count = 0;
    for (int d : c.with_rng(c.src(g)))
      if (c.src(d) == c.rng(g) && c.compose_raw(g, d) == c.identity(c.rng(g)) &&
          c.compose_raw(d, g) == c.identity(c.src(g)))
        ++count;
    REQUIRE_PROP(count == 1, "two-sided inverse of '" + c.morphism_name(g) + "' is not unique");
  }

  // components agree with a direct adjacency closure
  UnionFind uf(c.num_vertices());
  for (int m = 0; m < n; ++m) uf.unite(c.src(m), c.rng(m));
  REQUIRE_PROP(uf.blocks() == c.connected_components(), "component partitions disagree");
  return {};
}

// ---------------------------------------------------------------- alignment

Check alignment_fixture(Rng& rng, int, const SuiteConfig& cfg) {
  LcFixture f = random_lc_category(rng, cfg.max_morphisms, false);
  const Category& c = f.cat;
  int n = c.num_morphisms();
  auto ideals = ideal_table(c);
  auto inv = invertibles_and_equivalence(c);

  auto union_of = [&](const std::vector<int>& set) {
    Bitset u(n);
    for (int m : set) u |= ideals[m];
    return u;
  };

  bool groupoid = is_groupoid(c);
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b) {
      auto j = join(c, a, b, ideals);
      Bitset meet = ideals[a] & ideals[b];
      REQUIRE_PROP(union_of(j) == meet, "join does not generate the ideal intersection");
      auto indep = is_independent(c, j);
      REQUIRE_PROP(indep.independent, "join output is not independent");
      if (groupoid) {
        bool expect = c.rng(a) == c.rng(b);
        REQUIRE_PROP(j.empty() == !expect, "groupoid join emptiness is wrong");
        if (expect)
          REQUIRE_PROP(union_of(j) == ideals[c.identity(c.rng(a))],
                       "groupoid join union is not the full corner");
      }
    }

  // ~-stability
  for (int a = 0; a < n; ++a) {
    const auto& cls = inv.classes[inv.class_of[a]];
    if (cls.size() < 2) continue;
    int a2 = cls[a == cls[0] ? 1 : 0];
    int b = rng.below(n);
    REQUIRE_PROP(union_of(join(c, a, b, ideals)) == union_of(join(c, a2, b, ideals)),
                 "join is not ~-stable");
  }

  // monotonicity of families
  for (int t = 0; t < 10; ++t) {
    int k = rng.range(1, 3);
    std::vector<int> fam;
    for (int i = 0; i < k; ++i) fam.push_back(rng.below(n));
    std::sort(fam.begin(), fam.end());
    fam.erase(std::unique(fam.begin(), fam.end()), fam.end());
    auto small = join_family(c, fam);
    fam.push_back(rng.below(n));
    auto big = join_family(c, fam);
    REQUIRE_PROP(union_of(big).subset_of(union_of(small)), "join_family is not monotone");
  }
  return {};
}

// ---------------------------------------------------------------- skew soundness (A1)

Check skew_soundness_fixture(Rng& rng, int, const SuiteConfig& cfg) {
  LcFixture f = random_lc_category(rng, cfg.max_morphisms, false);
  int cap = group_order_fitting(f.cat.num_morphisms(), cfg.max_group_order, 400);
  Group g = random_group(rng, cap);
  Cocycle eta = f.make_cocycle(rng, g);
  SkewProduct sp = skew_product(f.cat, eta);  // validates axioms and LC

  const Category& d = sp.cat;
  int nd = d.num_morphisms(), nb = f.cat.num_morphisms();
  auto base_ideals = ideal_table(f.cat);
  auto skew_ideals = ideal_table(d);
  std::vector<std::vector<int>> base_join(nb * nb);
  std::vector<char> base_join_done(nb * nb, 0);

  for (int p = 0; p < nd; ++p)
    for (int q = p; q < nd; ++q) {
      int a = sp.base_of(p), b = sp.base_of(q);
      int ga = g.mul(eta(a), sp.elem_of(p)), gb = g.mul(eta(b), sp.elem_of(q));
      Bitset meet = skew_ideals[p] & skew_ideals[q];
      if (ga != gb) {
        REQUIRE_PROP(!meet.any(), "ideals intersect although the formula says empty");
        continue;
      }
      if (!base_join_done[a * nb + b]) {
        base_join[a * nb + b] = join(f.cat, a, b, base_ideals);
        base_join_done[a * nb + b] = 1;
      }
      std::vector<int> formula;
      for (int delta : base_join[a * nb + b])
        formula.push_back(sp.pair(delta, g.mul(g.inv(eta(delta)), ga)));
      Bitset un(nd);
      for (int m : formula) un |= skew_ideals[m];
      REQUIRE_PROP(un == meet, "formula union differs from the direct intersection at (" +
                                   d.morphism_name(p) + ", " + d.morphism_name(q) + ")");
      for (int x : formula)
        for (int y : formula)
          REQUIRE_PROP(x == y || !skew_ideals[y].test(x), "formula output is not independent");
      if (meet.any()) {
        auto canon = independent_generators(d, skew_ideals, meet);
        auto direct = join(d, p, q, skew_ideals);
        REQUIRE_PROP(canon == direct, "canonical joins disagree");
      }
    }
  return {};
}

// ---------------------------------------------------------------- skew action / quotient (round trip B)

Check skew_action_fixture(Rng& rng, int, const SuiteConfig& cfg) {
  LcFixture f = random_lc_category(rng, std::max(4, cfg.max_morphisms / 2), false);
  int cap = group_order_fitting(f.cat.num_morphisms(), 6, 60);
  Group g = random_group(rng, cap);
  Cocycle eta = f.make_cocycle(rng, g);
  SkewProduct sp = skew_product(f.cat, eta);
  GroupAction act = skew_group_action(sp);

  auto fr = freeness(sp.cat, act);
  REQUIRE_PROP(fr.free, "canonical skew action is not free");

  QuotientResult q = quotient_category(sp.cat, act);
  // [(beta, h)] -> beta must be an isomorphism onto the base
  REQUIRE_PROP(q.quotient.num_morphisms() == f.cat.num_morphisms(), "quotient has wrong size");
  CatFunctor iso;
  iso.vmap.assign(q.quotient.num_vertices(), -1);
  iso.mmap.assign(q.quotient.num_morphisms(), -1);
  for (int m = 0; m < q.quotient.num_morphisms(); ++m)
    iso.mmap[m] = sp.base_of(q.morphism_rep[m]);
  for (int v = 0; v < q.quotient.num_vertices(); ++v) iso.vmap[v] = iso.mmap[v];
  REQUIRE_PROP(is_bijective(q.quotient, f.cat, iso), "[(b,h)] -> b is not bijective");
  REQUIRE_PROP(is_functor(q.quotient, f.cat, iso), "[(b,h)] -> b is not a functor");
  return {};
}

// ---------------------------------------------------------------- exhaustive transport

Check exhaustive_transport_fixture(Rng& rng, int, const SuiteConfig& cfg) {
  LcFixture f = random_lc_category(rng, cfg.max_morphisms / 2, false);
  int cap = group_order_fitting(f.cat.num_morphisms(), cfg.max_group_order, 200);
  Group g = random_group(rng, cap);
  Cocycle eta = f.make_cocycle(rng, g);
  SkewProduct sp = skew_product(f.cat, eta);
  const Category& c = f.cat;

  for (int trial = 0; trial < 8; ++trial) {
    int v = rng.below(c.num_vertices());
    int x = rng.below(g.order());
    const auto& vc = c.with_rng(v);
    std::vector<int> up;
    for (int m : vc)
      if (rng.chance(0.5)) up.push_back(m);
    auto up_result = is_exhaustive(c, v, up);
    // transport downstairs: F' = {(m, eta(m)^-1 g)}
    std::vector<int> down;
    for (int m : up) down.push_back(sp.pair(m, g.mul(g.inv(eta(m)), x)));
    auto down_result = is_exhaustive(sp.cat, sp.pair(c.identity(v), x) , down);
    REQUIRE_PROP(up_result.exhaustive == down_result.exhaustive,
                 "exhaustive verdicts differ between base and skew product");
  }
  return {};
}

// ---------------------------------------------------------------- gross-tucker (A2)

Check gross_tucker_fixture(Rng& rng, int i, const SuiteConfig&) {
  FreeActionFixture f = random_free_action(rng, 60, 6);
  GrossTucker gt = gross_tucker(f.d, f.action);  // verifies rho exhaustively

  // independence of the vertex section, checked by isomorphism search at
  // modest sizes
  if (i % 5 == 0 && f.d.num_morphisms() <= 30) {
    std::vector<int> section(gt.quotient.quotient.num_vertices());
    for (int w = 0; w < (int)section.size(); ++w) {
      std::vector<int> members;
      for (int v = 0; v < f.d.num_vertices(); ++v)
        if (gt.quotient.qmap.vmap[v] == w) members.push_back(v);
      section[w] = members[rng.below((int)members.size())];
    }
    GrossTucker gt2 = gross_tucker(f.d, f.action, section);
    REQUIRE_PROP(find_isomorphism(gt.skew.cat, gt2.skew.cat).has_value(),
                 "skew products from two sections are not isomorphic");
  }
  return {};
}

// ---------------------------------------------------------------- quotient ideal identity (A3)

Check techn_fixture(Rng& rng, int, const SuiteConfig&) {
  FreeActionFixture f = random_free_action(rng, 60, 6);
  QuotientResult q = quotient_category(f.d, f.action);
  for (int lam : q.morphism_rep)
    for (int mu : q.morphism_rep) quotient_ideal_intersection(f.d, f.action, q, lam, mu);
  return {};
}

// ---------------------------------------------------------------- connectivity agreement (A4)

Check connectivity_fixture(Rng& rng, int, const SuiteConfig& cfg) {
  LcFixture f = random_lc_category(rng, cfg.max_morphisms, true);
  Group g = random_group(rng, cfg.max_group_order);
  Cocycle eta = restrict_to_image(f.cat, f.make_cocycle(rng, g));
  ConnectivityReport rep = skew_connectivity_report(f.cat, eta);
  REQUIRE_PROP(rep.nondegenerate, "fixture cocycle is degenerate");
  REQUIRE_PROP(rep.direct == rep.via_pi, "verdicts disagree");
  return {};
}

// ---------------------------------------------------------------- seven criteria (A5)

Check seven_fixture(Rng& rng, int i, const SuiteConfig& cfg) {
  if (i == 0) {
    // the dihedral surrogate of the worked example
    GroupoidCocycleFixture f = dihedral_surrogate();
    const Category& c = f.groupoid.cat;
    REQUIRE_PROP((int)f.psi.image.size() == 8, "surrogate cocycle is not surjective");
    std::vector<int> iso_img;
    for (int m : c.with_src(0))
      if (c.rng(m) == 0) iso_img.push_back(f.psi(m));
    std::sort(iso_img.begin(), iso_img.end());
    iso_img.erase(std::unique(iso_img.begin(), iso_img.end()), iso_img.end());
    REQUIRE_PROP((int)iso_img.size() == 4, "isotropy image is not of index 2");
    REQUIRE_PROP(skew_component_count(c, f.psi) == 2, "surrogate skew product must have 2 components");
    SevenCriteria sc = seven_criteria_check(f.groupoid, f.psi);
    REQUIRE_PROP(sc.agree, "criteria disagree on the surrogate");
    REQUIRE_PROP(!sc.criteria[0], "surrogate criteria should all be false");
    return {};
  }
  GroupoidCocycleFixture f = random_groupoid_with_cocycle(rng, 8, 6, cfg.max_group_order);
  SevenCriteria sc = seven_criteria_check(f.groupoid, f.psi);
  REQUIRE_PROP(sc.agree, "the seven criteria disagree");
  return {};
}

// ---------------------------------------------------------------- universal group (A6)

Check universal_group_fixture(Rng& rng, int i, const SuiteConfig& cfg) {
  if (i == 0) {
    FpInvariants inv = fp_invariants(universal_group(pair_groupoid(), UniversalMode::Raw), cfg.battery_bound);
    REQUIRE_PROP(inv.abelian == std::vector<int64_t>{0}, "U(pair groupoid) should abelianize to Z");
    REQUIRE_PROP(inv.hom_counts == std::vector<uint64_t>({2, 3, 6, 4, 4, 8}),
                 "U(pair groupoid) battery counts are not those of F1");
    FpInvariants z2 = fp_invariants(universal_group(one_object_group(Group::cyclic(2)), UniversalMode::Raw),
                                    cfg.battery_bound);
    FpGroup gg2{{"g"}, {{1, 1}}};
    REQUIRE_PROP(z2 == fp_invariants(gg2, cfg.battery_bound), "U(Z2) does not match <g | g^2>");
    PathCategory two_loops = path_category(two_loop_graph(), 3);
    FpInvariants f2 = fp_invariants(universal_group(two_loops.cat, UniversalMode::Raw), cfg.battery_bound);
    FpGroup free2{{"a", "b"}, {}};
    REQUIRE_PROP(f2 == fp_invariants(free2, cfg.battery_bound), "U(two-loop paths) is not F2");
    return {};
  }
  LcFixture f = random_lc_category(rng, 14, true);
  FpInvariants raw = fp_invariants(universal_group(f.cat, UniversalMode::Raw), cfg.battery_bound);
  FpInvariants conn =
      fp_invariants(universal_group(f.cat, UniversalMode::Connected, rng.below(f.cat.num_vertices())),
                    cfg.battery_bound);
  REQUIRE_PROP(raw == conn, "raw and connected universal-group invariants differ");
  return {};
}

// ---------------------------------------------------------------- covering layer (A7)

Check covering_fixture(Rng& rng, int, const SuiteConfig& cfg) {
  // replays the skew-soundness fixture stream, so the covering layer is
  // checked on exactly those products
  LcFixture f = random_lc_category(rng, cfg.max_morphisms, false);
  int cap = group_order_fitting(f.cat.num_morphisms(), cfg.max_group_order, 400);
  Group g = random_group(rng, cap);
  Cocycle eta = f.make_cocycle(rng, g);
  SkewProduct sp = skew_product(f.cat, eta);

  auto cov = is_covering(sp.cat, f.cat, sp.projection);
  REQUIRE_PROP(cov.covering, "skew projection is not a covering: " + cov.witness);

  // transformation category over the cocycle action vs the skew product
  CatAction a = cocycle_action(f.cat, eta);
  TransformationCategory tc = transformation_category(f.cat, a);
  int ng = g.order();
  CatFunctor to_skew;
  to_skew.vmap.assign(tc.cat.num_vertices(), -1);
  to_skew.mmap.assign(tc.cat.num_morphisms(), -1);
  for (int m = 0; m < tc.cat.num_morphisms(); ++m) {
    int base = tc.base[m], point = tc.point[m];
    to_skew.mmap[m] = sp.pair(base, point % ng);
  }
  for (int v = 0; v < tc.cat.num_vertices(); ++v) to_skew.vmap[v] = to_skew.mmap[v];
  REQUIRE_PROP(is_bijective(tc.cat, sp.cat, to_skew), "C*(C0xG) -> skew is not bijective");
  REQUIRE_PROP(is_functor(tc.cat, sp.cat, to_skew), "C*(C0xG) -> skew is not a functor");

  // transitivity of the cocycle action == connectedness of the skew product
  auto orbits = orbits_and_stabilizers(f.cat, a);
  REQUIRE_PROP(orbits.transitive == sp.cat.is_connected(),
               "transitivity and connectedness disagree");

  // the right G-translation commutes with p, acts freely, and embeds in the
  // deck group of connected coverings
  std::vector<CatFunctor> translations(ng);
  for (int x = 0; x < ng; ++x) {
    CatFunctor& t = translations[x];
    t.vmap.resize(sp.cat.num_vertices());
    t.mmap.resize(sp.cat.num_morphisms());
    for (int m = 0; m < sp.cat.num_morphisms(); ++m)
      t.mmap[m] = sp.pair(sp.base_of(m), g.mul(sp.elem_of(m), x));
    for (int v = 0; v < sp.cat.num_vertices(); ++v) t.vmap[v] = t.mmap[v];
    REQUIRE_PROP(is_functor(sp.cat, sp.cat, t), "right translation is not a functor");
    for (int m = 0; m < sp.cat.num_morphisms(); ++m)
      REQUIRE_PROP(sp.projection.mmap[t.mmap[m]] == sp.projection.mmap[m],
                   "right translation does not commute with the projection");
    if (x != g.unit())
      for (int m = 0; m < sp.cat.num_morphisms(); ++m)
        REQUIRE_PROP(t.mmap[m] != m, "right translation is not free");
  }
  if (sp.cat.is_connected() && sp.cat.num_morphisms() <= 60) {
    DeckGroup deck = deck_transformations(sp.cat, f.cat, sp.projection);
    for (int x = 0; x < ng; ++x) {
      bool found = false;
      for (auto& el : deck.elements)
        if (el.mmap == translations[x].mmap) {
          found = true;
          break;
        }
      REQUIRE_PROP(found, "right translation is missing from the deck group");
    }
  }

  // stabilizers along an orbit are conjugate (groupoid fixtures)
  if (is_groupoid(f.cat)) {
    Groupoid gg = as_groupoid(f.cat);
    for (auto& orbit : orbits.orbits) {
      int v0 = orbit[0];
      for (int v : orbit) {
        if (v == v0) continue;
        int witness = -1;
        for (int m = 0; m < f.cat.num_morphisms() && witness < 0; ++m)
          if (a.fiber_of[v0] == f.cat.src(m) && a.act[m][v0] == v) witness = m;
        if (witness < 0) continue;  // orbit closure may need several steps
        std::vector<int> conj;
        for (int s : orbits.stabilizers[v0])
          conj.push_back(*f.cat.compose(*f.cat.compose(witness, s), gg.inv[witness]));
        std::sort(conj.begin(), conj.end());
        REQUIRE_PROP(conj == orbits.stabilizers[v], "stabilizers along an orbit are not conjugate");
      }
    }
  }
  return {};
}

// ---------------------------------------------------------------- zappa-szep (A8)

Check zappa_fixture(Rng& rng, int i, const SuiteConfig&) {
  if (i == 0) {
    // exchange isomorphism on the two-loop Exel-Pardo fixture at budget 3
    EpWindow w = ep_category_system(two_loop_swap_system(), 3);
    Group z2 = Group::cyclic(2);
    Cocycle psi = edge_cocycle(w.paths, z2, {1, 1});  // f == 1
    ExchangeResult ex = exchange_isomorphism_check(w.sys, psi);
    // eta_f(alpha, h) = length(alpha) mod 2, constant on H-fibers
    ZsProduct z = zs_product(w.sys);
    Cocycle etaf = promote_invariant_cocycle(w.sys, psi, z);
    for (int p = 0; p < z.cat.num_morphisms(); ++p) {
      int expected = z.cat.grade(p) % 2;
      REQUIRE_PROP(etaf(p) == expected, "eta_f is not the length mod 2");
    }
    REQUIRE_PROP(ex.lhs.cat.num_morphisms() == ex.rhs.cat.num_morphisms(), "exchange sides differ");
    return {};
  }

  if (i % 3 == 1) {
    // path categories are LC and singly aligned within the window
    Graph g;
    int nv = rng.range(1, 2);
    for (int v = 0; v < nv; ++v) g.vertices.push_back("u" + std::to_string(v));
    int ne = rng.range(1, 2);
    for (int e = 0; e < ne; ++e)
      g.edges.push_back({std::string(1, (char)('a' + e)), g.vertices[rng.below(nv)],
                         g.vertices[rng.below(nv)]});
    PathCategory pc = path_category(g, rng.range(2, 5));
    REQUIRE_PROP(is_left_cancellative(pc.cat).left_cancellative, "path window is not LC");
    auto ideals = ideal_table(pc.cat);
    int n = pc.cat.num_morphisms();
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) {
        auto j = join(pc.cat, a, b, ideals);
        REQUIRE_PROP(j.size() <= 1, "path window is not singly aligned");
        if (!j.empty()) {
          bool a_in_b = ideals[b].test(a), b_in_a = ideals[a].test(b);
          REQUIRE_PROP(a_in_b || b_in_a, "nonempty join without a prefix relation");
          REQUIRE_PROP(j[0] == (a_in_b ? a : b), "join is not the longer path");
        }
      }

    // the join formula also holds on the graded skew view of the window
    Group grp = random_group(rng, 4);
    std::vector<int> ev(ne);
    for (auto& x : ev) x = rng.below(grp.order());
    SkewProduct sp = skew_product(pc.cat, edge_cocycle(pc, grp, ev));
    auto skew_ideals = ideal_table(sp.cat);
    for (int p = 0; p < sp.cat.num_morphisms(); ++p)
      for (int q = p; q < sp.cat.num_morphisms(); ++q) {
        Bitset meet = skew_ideals[p] & skew_ideals[q];
        auto formula = skew_join_formula(sp, p, q);
        Bitset un(sp.cat.num_morphisms());
        for (int m : formula) un |= skew_ideals[m];
        REQUIRE_PROP(un == meet, "graded skew join formula mismatch");
      }
    return {};
  }

  // trivial-phi Zappa-Szep products match an independently built semidirect table
  FreeActionFixture f = random_free_action(rng, 30, 4);
  Category sd = semidirect_product(f.d, f.action);
  const Group& h = f.action.group;
  int nh = h.order();
  CategoryTable t;
  std::vector<std::vector<int>> pidx(f.d.num_morphisms(), std::vector<int>(nh, -1));
  for (int v = 0; v < f.d.num_vertices(); ++v) {
    t.add_vertex(f.d.vertex_name(v), f.d.morphism_name(f.d.identity(v)) + "⋊" + h.elem_name(0));
    pidx[v][0] = v;
  }
  for (int m = 0; m < f.d.num_morphisms(); ++m)
    for (int x = 0; x < nh; ++x) {
      if (f.d.is_identity(m) && x == 0) continue;
      int sv = f.d.src(f.action.act[h.inv(x)][f.d.identity(f.d.src(m))]);
      pidx[m][x] = t.add_morphism(f.d.morphism_name(m) + "⋊" + h.elem_name(x), sv, f.d.rng(m));
    }
  for (int m = 0; m < f.d.num_morphisms(); ++m)
    for (int x = 0; x < nh; ++x)
      for (int k = 0; k < f.d.num_morphisms(); ++k)
        for (int y = 0; y < nh; ++y) {
          // (m,x)(k,y) = (m (x.k), (x y)) when x^-1 s(m) = r(k)
          if (f.d.src(f.action.act[h.inv(x)][f.d.identity(f.d.src(m))]) != f.d.rng(k)) continue;
          int xk = f.action.act[x][k];
          auto prod = f.d.compose(m, xk);
          if (!prod) continue;
          t.set_compose(pidx[m][x], pidx[k][y], pidx[*prod][h.mul(x, y)]);
        }
  Category direct = std::move(t).finalize();
  REQUIRE_PROP(category_to_json(sd) == category_to_json(direct),
               "semidirect product differs from the direct table");
  return {};
}

// ---------------------------------------------------------------- retraction/tree and decomposition

Check retraction_fixture(Rng& rng, int, const SuiteConfig&) {
  GroupoidCocycleFixture f = random_groupoid_with_cocycle(rng, 4, 6, 8);
  const Groupoid& g = f.groupoid;
  int root = rng.below(g.cat.num_vertices());
  MaximalTree tree = maximal_tree(g, root);
  Retraction r = retraction_from_tree(g, tree);
  // restricts to the identity on the isotropy
  for (int m : g.cat.with_src(root))
    if (g.cat.rng(m) == root)
      REQUIRE_PROP(r.elem_to_morph[r.cocycle(m)] == m, "retraction is not the identity on G_x");
  MaximalTree back = tree_from_retraction(g, r);
  REQUIRE_PROP(back.root == tree.root && back.t == tree.t, "tree round trip failed");
  REQUIRE_PROP(decomposition_is_isomorphism(g, tree), "theta is not an isomorphism");

  // a random tree also round-trips through its retraction
  MaximalTree random_tree;
  random_tree.root = root;
  random_tree.t.assign(g.cat.num_vertices(), -1);
  for (int y = 0; y < g.cat.num_vertices(); ++y) {
    if (y == root) {
      random_tree.t[y] = g.cat.identity(root);
      continue;
    }
    std::vector<int> cand;
    for (int m : g.cat.with_src(root))
      if (g.cat.rng(m) == y) cand.push_back(m);
    random_tree.t[y] = cand[rng.below((int)cand.size())];
  }
  Retraction r2 = retraction_from_tree(g, random_tree);
  MaximalTree back2 = tree_from_retraction(g, r2);
  REQUIRE_PROP(back2.t == random_tree.t, "random tree round trip failed");
  return {};
}

// ---------------------------------------------------------------- cocycle factorization through U(C)

Check factorization_fixture(Rng& rng, int, const SuiteConfig& cfg) {
  LcFixture f = random_lc_category(rng, cfg.max_morphisms / 2, false);
  Group g = random_group(rng, cfg.max_group_order);
  Cocycle psi = f.make_cocycle(rng, g);
  const Category& c = f.cat;
  int n = c.num_morphisms();
  // the homomorphism psi' on the raw presentation sends generator m to psi(m);
  // every defining relator must die, and psi' o j = psi holds by construction
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int32_t ab = c.compose_raw(a, b);
      if (ab < 0) continue;
      int w = g.mul(psi(a), g.mul(psi(b), g.inv(psi(ab))));
      REQUIRE_PROP(w == g.unit(), "a defining relator survives under psi'");
    }
  for (int m = 0; m < n; ++m)
    REQUIRE_PROP(psi(m) == psi.values[m], "psi' o j does not reproduce psi");
  return {};
}

// ---------------------------------------------------------------- mutation sensitivity (A9)

Check mutation_fixture(Rng&, int i, const SuiteConfig& cfg) {
  if (i == 0) {
    SuiteConfig mini = cfg;
    mini.scale = std::max(1, cfg.scale / 20);
    mini.mutant = testing::Mutant::SkewComposabilityFlipped;
    SuiteResult r = run_suite("a1-skew-soundness", mini);
    REQUIRE_PROP(r.failed > 0, "flipped skew composability went unnoticed");
    return {};
  }
  if (i == 1) {
    testing::ScopedMutant m(testing::Mutant::FreenessCheckDropped);
    Category arrow = arrow_category();
    Group z2 = Group::cyclic(2);
    std::vector<std::vector<int>> tables(2);
    for (int x = 0; x < 2; ++x) {
      tables[x].resize(arrow.num_morphisms());
      for (int k = 0; k < arrow.num_morphisms(); ++k) tables[x][k] = k;  // trivial, hence not free
    }
    GroupAction act = validate_action(arrow, z2, tables);
    bool threw = false;
    try {
      quotient_category(arrow, act);
    } catch (const Error& e) {
      threw = e.code() == Errc::NotFree;
    }
    REQUIRE_PROP(!threw, "mutant did not disable the freeness check");
    testing::set_mutant(testing::Mutant::None);
    threw = false;
    try {
      quotient_category(arrow, act);
    } catch (const Error& e) {
      threw = e.code() == Errc::NotFree;
    }
    REQUIRE_PROP(threw, "non-free quotient was not rejected");
    return {};
  }
  {
    testing::ScopedMutant m(testing::Mutant::TreeSearchOutsideKernel);
    GroupoidCocycleFixture f = dihedral_surrogate();
    SevenCriteria sc = seven_criteria_check(f.groupoid, f.psi);
    REQUIRE_PROP(!sc.agree, "out-of-kernel tree search went unnoticed");
  }
  return {};
}

struct SuiteDef {
  const char* id;
  const char* description;
  uint64_t salt;
  int full_count;
  Check (*fn)(Rng&, int, const SuiteConfig&);
};

const SuiteDef kSuites[] = {
    {"a1-skew-soundness",
     "skew products validate, stay LC, and the skew join formula matches brute force", 101, 200,
     skew_soundness_fixture},
    {"a2-gross-tucker", "Gross-Tucker reconstruction is an equivariant isomorphism", 102, 100,
     gross_tucker_fixture},
    {"a3-quotient-ideals", "quotient ideal intersections match the pushforward union", 102, 100,
     techn_fixture},
    {"a4-connectivity-agreement", "union-find and pi-image connectivity verdicts agree", 104, 200,
     connectivity_fixture},
    {"a5-seven-criteria", "the seven connectedness criteria agree", 105, 100, seven_fixture},
    {"a6-universal-group", "raw and F(S)*pi presentations have equal invariants", 106, 50,
     universal_group_fixture},
    {"a7-covering-layer", "skew projections are coverings; deck groups contain translations", 101,
     200, covering_fixture},
    {"a8-zappa-szep", "Zappa-Szep products, path windows, and the exchange isomorphism", 108, 40,
     zappa_fixture},
    {"a9-mutation-sensitivity", "seeded mutants are caught by the suites", 109, 3,
     mutation_fixture},
    {"m1-cat-core", "serialization round trips; ~ is an equivalence; inverses unique", 201, 40,
     cat_core_fixture},
    {"m2-alignment", "joins generate ideal intersections and stay independent", 202, 40,
     alignment_fixture},
    {"m3-skew-action", "the canonical action is free with quotient the base", 203, 40,
     skew_action_fixture},
    {"m4-exhaustive-transport", "exhaustive sets transport along the skew projection", 204, 30,
     exhaustive_transport_fixture},
    {"m5-retraction-tree", "trees and retractions are mutually inverse; theta decomposes", 205, 30,
     retraction_fixture},
    {"m6-cocycle-factorization", "every cocycle factors through the universal group", 206, 30,
     factorization_fixture},
};

}  // namespace

std::vector<std::string> suite_ids() {
  std::vector<std::string> ids;
  for (auto& s : kSuites) ids.push_back(s.id);
  return ids;
}

SuiteResult run_suite(const std::string& id, const SuiteConfig& config) {
  for (auto& s : kSuites) {
    if (id != s.id) continue;
    testing::ScopedMutant guard(config.mutant);
    auto fn = s.fn;
    SuiteConfig cfg = config;
    return drive(s.id, s.description, cfg, s.salt, s.full_count,
                 [fn, cfg](Rng& rng, int i) { return fn(rng, i, cfg); });
  }
  fail(Errc::ValidationError, "unknown suite '" + id + "'");
}

std::vector<SuiteResult> run_all_suites(const SuiteConfig& config) {
  std::vector<SuiteResult> out;
  for (auto& s : kSuites) {
    if (config.mutant != testing::Mutant::None && std::string(s.id) == "a9-mutation-sensitivity")
      continue;  // no nested mutants
    out.push_back(run_suite(s.id, config));
  }
  return out;
}

std::string report_to_json(const SuiteConfig& config, const std::vector<SuiteResult>& results) {
  nlohmann::ordered_json j;
  j["config"] = {{"seed", config.seed},
                 {"scale", config.scale},
                 {"max_morphisms", config.max_morphisms},
                 {"max_group_order", config.max_group_order},
                 {"battery_bound", config.battery_bound},
                 {"mutant", (int)config.mutant}};
  nlohmann::ordered_json suites = nlohmann::ordered_json::array();
  for (auto& r : results) {
    nlohmann::ordered_json s;
    s["id"] = r.id;
    s["description"] = r.description;
    s["fixtures"] = r.fixtures;
    s["passed"] = r.passed;
    s["failed"] = r.failed;
    if (!r.counterexample.empty()) s["counterexample"] = r.counterexample;
    suites.push_back(s);
  }
  j["suites"] = suites;
  return j.dump(2) + "\n";
}

}  // namespace lcsc
