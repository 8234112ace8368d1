#include <doctest.h>

#include "lcsc/actions.hpp"
#include "lcsc/alignment.hpp"
#include "lcsc/fixtures.hpp"
#include "lcsc/functor.hpp"

using namespace lcsc;

namespace {

GroupAction swap_action(const Category& pg) {
  // x <-> y, a <-> abar on the pair groupoid
  return validate_action(pg, Group::cyclic(2), {{0, 1, 2, 3}, {1, 0, 3, 2}});
}

}  // namespace

TEST_CASE("freeness verdicts") {
  Category pg = pair_groupoid();
  CHECK(freeness(pg, swap_action(pg)).free);

  Category ar = arrow_category();
  GroupAction triv = validate_action(ar, Group::cyclic(2), {{0, 1, 2}, {0, 1, 2}});
  auto r = freeness(ar, triv);
  REQUIRE_FALSE(r.free);
  CHECK(r.witness->first == 1);
}

TEST_CASE("non-automorphism tables are rejected") {
  Category pg = pair_groupoid();
  // swapping a and abar without swapping the vertices breaks the endpoints
  try {
    validate_action(pg, Group::cyclic(2), {{0, 1, 2, 3}, {0, 1, 3, 2}});
    FAIL("expected NotAutomorphism");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotAutomorphism);
  }
}

TEST_CASE("quotient of the pair groupoid by the swap is Z2") {
  Category pg = pair_groupoid();
  QuotientResult q = quotient_category(pg, swap_action(pg));
  CHECK(q.quotient.num_vertices() == 1);
  CHECK(q.quotient.num_morphisms() == 2);
  int cls = 1;  // the class of {a, abar}
  CHECK(*q.quotient.compose(cls, cls) == q.quotient.identity(0));
  // fibers of qmap are the orbits
  CHECK(q.qmap.mmap[pg.morphism_by_name("a")] == q.qmap.mmap[pg.morphism_by_name("abar")]);
}

TEST_CASE("quotient by the trivial group is the category itself") {
  Category pg = pair_groupoid();
  GroupAction triv{Group::trivial(), {{0, 1, 2, 3}}};
  QuotientResult q = quotient_category(pg, triv);
  CHECK(q.quotient.num_morphisms() == pg.num_morphisms());
  CHECK(find_isomorphism(q.quotient, pg).has_value());
}

TEST_CASE("non-free actions are rejected with NotFree") {
  Category ar = arrow_category();
  GroupAction triv = validate_action(ar, Group::cyclic(2), {{0, 1, 2}, {0, 1, 2}});
  try {
    quotient_category(ar, triv);
    FAIL("expected NotFree");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotFree);
  }
}

TEST_CASE("quotient ideal intersections") {
  Category pg = pair_groupoid();
  GroupAction act = swap_action(pg);
  QuotientResult q = quotient_category(pg, act);

  SUBCASE("lambda = mu gives the full principal ideal") {
    int a = pg.morphism_by_name("a");
    auto set = quotient_ideal_intersection(pg, act, q, a, a);
    CHECK(Bitset(principal_ideal_bits(q.quotient, q.qmap.mmap[a])).to_vector() == set);
  }
  SUBCASE("lambda = a, mu = x") {
    int a = pg.morphism_by_name("a"), x = pg.identity(pg.vertex_by_name("x"));
    auto set = quotient_ideal_intersection(pg, act, q, a, x);
    CHECK(set.size() == 2);  // both classes
  }
  SUBCASE("a two-component fixture with empty intersections on both sides") {
    // two disjoint arrows swapped by Z2
    CategoryTable t;
    int ua = t.add_vertex("uA"), va = t.add_vertex("vA");
    int ub = t.add_vertex("uB"), vb = t.add_vertex("vB");
    int ea = t.add_morphism("eA", va, ua);
    int eb = t.add_morphism("eB", vb, ub);
    Category d = std::move(t).finalize();
    GroupAction sw = validate_action(
        d, Group::cyclic(2),
        {{0, 1, 2, 3, 4, 5}, {2, 3, 0, 1, 5, 4}});
    QuotientResult qq = quotient_category(d, sw);
    (void)ea;
    (void)eb;
    (void)ua;
    (void)ub;
    // [vA] and [uA]: no common extension exists in any translate
    int lam = d.identity(va), mu = d.identity(d.vertex_by_name("uA"));
    auto set = quotient_ideal_intersection(d, sw, qq, lam, mu);
    CHECK(set.empty());
  }
}

TEST_CASE("gross-tucker on the swap action") {
  Category pg = pair_groupoid();
  GroupAction act = swap_action(pg);
  GrossTucker gt = gross_tucker(pg, act);
  // quotient is Z2 as a one-object category; eta is the identity cocycle
  CHECK(gt.quotient.quotient.num_morphisms() == 2);
  CHECK(gt.eta(1) == 1);
  CHECK(find_isomorphism(gt.skew.cat, pg).has_value());
}

TEST_CASE("gross-tucker recovers skew products up to isomorphism") {
  Category pg = pair_groupoid();
  Group z2 = Group::cyclic(2);
  Cocycle eta0 = validate_cocycle(pg, z2, {0, 0, 1, 1});
  SkewProduct sp = skew_product(pg, eta0);
  GroupAction act = skew_group_action(sp);
  GrossTucker gt = gross_tucker(sp.cat, act);
  CHECK(find_isomorphism(gt.skew.cat, sp.cat).has_value());
}

TEST_CASE("gross-tucker with the trivial group") {
  Category pg = pair_groupoid();
  GroupAction triv{Group::trivial(), {{0, 1, 2, 3}}};
  GrossTucker gt = gross_tucker(pg, triv);
  CHECK(gt.skew.cat.num_morphisms() == pg.num_morphisms());
  for (int v : gt.eta.values) CHECK(v == 0);
}

TEST_CASE("gross-tucker rejects non-free actions") {
  Category ar = arrow_category();
  GroupAction triv = validate_action(ar, Group::cyclic(2), {{0, 1, 2}, {0, 1, 2}});
  try {
    gross_tucker(ar, triv);
    FAIL("expected NotFree");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotFree);
  }
}

TEST_CASE("section independence at a fixed seed") {
  Rng rng(2024);
  FreeActionFixture f = random_free_action(rng, 24, 4);
  GrossTucker gt1 = gross_tucker(f.d, f.action);
  // pick the largest representative over each quotient vertex instead
  std::vector<int> section(gt1.quotient.quotient.num_vertices(), -1);
  for (int v = 0; v < f.d.num_vertices(); ++v) section[gt1.quotient.qmap.vmap[v]] = v;
  GrossTucker gt2 = gross_tucker(f.d, f.action, section);
  CHECK(find_isomorphism(gt1.skew.cat, gt2.skew.cat).has_value());
}
