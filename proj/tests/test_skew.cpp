#include <doctest.h>

#include "lcsc/actions.hpp"
#include "lcsc/fixtures.hpp"
#include "lcsc/functor.hpp"
#include "lcsc/skew.hpp"
#include "lcsc/zappa.hpp"

using namespace lcsc;

TEST_CASE("skew product of the trivial category") {
  CategoryTable t;
  t.add_vertex("*");
  Category c = std::move(t).finalize();
  Group z3 = Group::cyclic(3);
  SkewProduct sp = skew_product(c, trivial_cocycle(c, z3));
  CHECK(sp.cat.num_vertices() == 3);
  CHECK(sp.cat.num_morphisms() == 3);  // identities only
  CHECK(sp.cat.connected_components().size() == 3);
}

TEST_CASE("pair groupoid skewed by Z2") {
  Category pg = pair_groupoid();
  Group z2 = Group::cyclic(2);
  Cocycle eta = validate_cocycle(pg, z2, {0, 0, 1, 1});
  SkewProduct sp = skew_product(pg, eta);
  CHECK(sp.cat.num_vertices() == 4);
  CHECK(sp.cat.num_morphisms() == 8);
  int p = sp.pair(pg.morphism_by_name("a"), 0);
  CHECK(sp.cat.vertex_name(sp.cat.src(p)) == "x⋉0");
  CHECK(sp.cat.vertex_name(sp.cat.rng(p)) == "y⋉1");
}

TEST_CASE("skew by the trivial group is the base") {
  Category pg = pair_groupoid();
  SkewProduct sp = skew_product(pg, trivial_cocycle(pg, Group::trivial()));
  CHECK(sp.cat.num_morphisms() == pg.num_morphisms());
  // (m, e) -> m
  CatFunctor f;
  f.vmap = sp.projection.vmap;
  f.mmap = sp.projection.mmap;
  CHECK(is_bijective(sp.cat, pg, f));
  CHECK(is_functor(sp.cat, pg, f));
}

TEST_CASE("the skew join formula") {
  Category pg = pair_groupoid();
  Group z2 = Group::cyclic(2);
  Cocycle eta = validate_cocycle(pg, z2, {0, 0, 1, 1});
  SkewProduct sp = skew_product(pg, eta);
  int a = pg.morphism_by_name("a");

  SUBCASE("mismatched range elements give the empty join") {
    // r(a,0) = (y,1), r(a,1) = (y,0)
    CHECK(skew_join_check(sp, sp.pair(a, 0), sp.pair(a, 1)).empty());
  }
  SUBCASE("join with itself is itself") {
    auto j = skew_join_check(sp, sp.pair(a, 0), sp.pair(a, 0));
    REQUIRE(j.size() == 1);
    // one representative of the ~ class of (a,0)
    Bitset u = principal_ideal_bits(sp.cat, j[0]);
    CHECK(u == principal_ideal_bits(sp.cat, sp.pair(a, 0)));
  }
  SUBCASE("two-loop window into Z2 by path length") {
    PathCategory two = path_category(two_loop_graph(), 3);
    Group z2b = Group::cyclic(2);
    Cocycle len = edge_cocycle(two, z2b, {1, 1});
    SkewProduct spw = skew_product(two.cat, len);
    int pa = two.cat.morphism_by_name("a"), pb = two.cat.morphism_by_name("b");
    CHECK(skew_join_check(spw, spw.pair(pa, 0), spw.pair(pb, 0)).empty());
  }
}

TEST_CASE("formula-only joins for symbolic targets") {
  // eta into Z given symbolically; no product is materialized
  PathCategory two = path_category(two_loop_graph(), 3);
  Group z = Group::free_group(1);
  int one = z.intern({1});
  Cocycle len = edge_cocycle(two, z, {one, one});
  int a = two.cat.morphism_by_name("a"), b = two.cat.morphism_by_name("b");
  int aa = two.cat.morphism_by_name("aa");
  CHECK(skew_join_pairs(two.cat, len, {a, z.unit()}, {b, z.unit()}).empty());
  auto j = skew_join_pairs(two.cat, len, {a, z.intern({1})}, {aa, z.unit()});
  REQUIRE(j.size() == 1);
  CHECK(j[0].first == aa);
  // (aa, eta(aa)^-1 eta(a) g) = (aa, -2 + 1 + 1) = (aa, 0)
  CHECK(j[0].second == z.unit());
}

TEST_CASE("the canonical action on a skew product") {
  Category pg = pair_groupoid();
  Group z2 = Group::cyclic(2);
  Cocycle eta = validate_cocycle(pg, z2, {0, 0, 1, 1});
  SkewProduct sp = skew_product(pg, eta);
  GroupAction act = skew_group_action(sp);
  int a = pg.morphism_by_name("a");
  // 1.(a,0) = (a,1)
  CHECK(act.act[1][sp.pair(a, 0)] == sp.pair(a, 1));
  for (int m = 0; m < sp.cat.num_morphisms(); ++m) CHECK(act.act[0][m] == m);
  CHECK(freeness(sp.cat, act).free);
}

TEST_CASE("semidirect products") {
  SUBCASE("by the trivial group") {
    Category ar = arrow_category();
    GroupAction triv{Group::trivial(), {{0, 1, 2}}};
    Category sd = semidirect_product(ar, triv);
    CHECK(sd.num_morphisms() == ar.num_morphisms());
    CHECK(find_isomorphism(sd, ar).has_value());
  }

  SUBCASE("trivial action gives the direct product") {
    Category ar = arrow_category();
    Group z2 = Group::cyclic(2);
    std::vector<std::vector<int>> tables = {{0, 1, 2}, {0, 1, 2}};
    GroupAction act = validate_action(ar, z2, tables);
    Category sd = semidirect_product(ar, act);
    CHECK(sd.num_vertices() == 2);
    CHECK(sd.num_morphisms() == 6);
    // direct product category: morphisms (m, h), compose componentwise
    CategoryTable t;
    int u = t.add_vertex("u"), v = t.add_vertex("v");
    std::vector<std::vector<int>> of(3, std::vector<int>(2));
    of[0][0] = u;
    of[1][0] = v;
    of[0][1] = t.add_morphism("u1", u, u);
    of[1][1] = t.add_morphism("v1", v, v);
    of[2][0] = t.add_morphism("e0", v, u);
    of[2][1] = t.add_morphism("e1", v, u);
    for (int m = 0; m < 3; ++m)
      for (int h = 0; h < 2; ++h)
        for (int k = 0; k < 3; ++k)
          for (int l = 0; l < 2; ++l) {
            if (ar.src(m) != ar.rng(k)) continue;
            t.set_compose(of[m][h], of[k][l], of[*ar.compose(m, k)][(h + l) % 2]);
          }
    Category prod = std::move(t).finalize();
    CHECK(find_isomorphism(sd, prod).has_value());
  }

  SUBCASE("pair groupoid by the swap") {
    Category pg = pair_groupoid();
    Group z2 = Group::cyclic(2);
    // swap: x <-> y, a <-> abar
    std::vector<std::vector<int>> tables = {{0, 1, 2, 3}, {1, 0, 3, 2}};
    GroupAction act = validate_action(pg, z2, tables);
    Category sd = semidirect_product(pg, act);
    CHECK(sd.num_morphisms() == 8);
    CHECK(sd.is_connected());
  }
}

TEST_CASE("the coordinate cocycle on a semidirect product") {
  // on D x| G the assignment (m, g) -> g is a cocycle
  Category pg = pair_groupoid();
  Group z2 = Group::cyclic(2);
  GroupAction swap = validate_action(pg, z2, {{0, 1, 2, 3}, {1, 0, 3, 2}});
  CategorySystem sys;
  sys.cat = pg;
  sys.group = z2;
  sys.act = swap.act;
  sys.phi.assign(2, std::vector<int>(pg.num_morphisms()));
  for (int h = 0; h < 2; ++h)
    for (int m = 0; m < pg.num_morphisms(); ++m) sys.phi[h][m] = h;
  ZsProduct z = zs_product(sys);
  std::vector<int> values(z.cat.num_morphisms());
  for (int p = 0; p < z.cat.num_morphisms(); ++p) values[p] = z.elem_of(p);
  Cocycle eta0 = validate_cocycle(z.cat, z2, values);
  CHECK(eta0.nondegenerate == true);
}

TEST_CASE("exhaustive transport across the projection") {
  Category pg = pair_groupoid();
  Group z2 = Group::cyclic(2);
  Cocycle eta = validate_cocycle(pg, z2, {0, 0, 1, 1});
  SkewProduct sp = skew_product(pg, eta);
  int x = pg.vertex_by_name("x");
  // F = {x, abar} is all of xC, hence exhaustive; the twisted image must be too
  std::vector<int> up = {pg.identity(x), pg.morphism_by_name("abar")};
  REQUIRE(is_exhaustive(pg, x, up).exhaustive);
  for (int g = 0; g < 2; ++g) {
    std::vector<int> down;
    for (int m : up) down.push_back(sp.pair(m, z2.mul(z2.inv(eta(m)), g)));
    CHECK(is_exhaustive(sp.cat, sp.pair(pg.identity(x), g), down).exhaustive);
  }
}
