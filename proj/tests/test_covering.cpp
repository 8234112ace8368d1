#include <doctest.h>

#include <algorithm>

#include "lcsc/actions.hpp"
#include "lcsc/covering.hpp"
#include "lcsc/fixtures.hpp"
#include "lcsc/skew.hpp"

using namespace lcsc;

namespace {

SkewProduct pair_skew_z2() {
  Category pg = pair_groupoid();
  Cocycle eta = validate_cocycle(pg, Group::cyclic(2), {0, 0, 1, 1});
  return skew_product(pg, eta);
}

}  // namespace

TEST_CASE("skew projections are coverings") {
  SkewProduct sp = pair_skew_z2();
  CHECK(is_covering(sp.cat, sp.base, sp.projection).covering);
}

TEST_CASE("quotient maps of free actions are coverings") {
  Category pg = pair_groupoid();
  GroupAction swap = validate_action(pg, Group::cyclic(2), {{0, 1, 2, 3}, {1, 0, 3, 2}});
  QuotientResult q = quotient_category(pg, swap);
  CHECK(is_covering(pg, q.quotient, q.qmap).covering);
}

TEST_CASE("the collapse onto a point is not a covering") {
  Category ar = arrow_category();
  CategoryTable t;
  t.add_vertex("*");
  Category pt = std::move(t).finalize();
  CatFunctor p{{0, 0}, {0, 0, 0}};
  auto r = is_covering(ar, pt, p);
  CHECK_FALSE(r.covering);
  CHECK(!r.witness.empty());
}

TEST_CASE("transformation categories") {
  Category pg = pair_groupoid();

  SUBCASE("singleton fibers with the trivial action reproduce the category") {
    CatAction a;
    a.point_names = {"px", "py"};
    a.fiber_of = {0, 1};
    a.act.assign(pg.num_morphisms(), std::vector<int>(2, -1));
    for (int m = 0; m < pg.num_morphisms(); ++m) a.act[m][pg.src(m)] = pg.rng(m);
    TransformationCategory tc = transformation_category(pg, a);
    CHECK(tc.cat.num_morphisms() == pg.num_morphisms());
    CHECK(find_isomorphism(tc.cat, pg).has_value());
  }

  SUBCASE("the cocycle-action carrier is isomorphic to the skew product") {
    SkewProduct sp = pair_skew_z2();
    CatAction a = cocycle_action(sp.base, sp.eta);
    TransformationCategory tc = transformation_category(sp.base, a);
    CatFunctor f;
    f.vmap.assign(tc.cat.num_vertices(), -1);
    f.mmap.assign(tc.cat.num_morphisms(), -1);
    for (int m = 0; m < tc.cat.num_morphisms(); ++m)
      f.mmap[m] = sp.pair(tc.base[m], tc.point[m] % 2);
    for (int v = 0; v < tc.cat.num_vertices(); ++v) f.vmap[v] = f.mmap[v];
    CHECK(is_bijective(tc.cat, sp.cat, f));
    CHECK(is_functor(tc.cat, sp.cat, f));
  }

  SUBCASE("pair groupoid on a two-point fiber with a swap") {
    CatAction a;
    a.point_names = {"0", "1", "2", "3"};
    a.fiber_of = {0, 0, 1, 1};  // two points over x, two over y
    a.act.assign(pg.num_morphisms(), std::vector<int>(4, -1));
    int x = 0, y = 1, am = pg.morphism_by_name("a"), ab = pg.morphism_by_name("abar");
    a.act[pg.identity(x)] = {0, 1, -1, -1};
    a.act[pg.identity(y)] = {-1, -1, 2, 3};
    a.act[am] = {3, 2, -1, -1};  // the swap
    a.act[ab] = {-1, -1, 1, 0};  // its inverse
    TransformationCategory tc = transformation_category(pg, a);
    CHECK(tc.cat.num_morphisms() == 8);
    CHECK(is_groupoid(tc.cat));
    // the action has two orbits, so the transformation groupoid has two
    // components
    CHECK(tc.cat.connected_components().size() == 2);
    auto orb = orbits_and_stabilizers(pg, a);
    CHECK(orb.orbits.size() == 2);
  }
}

TEST_CASE("orbits and stabilizers of cocycle actions") {
  SUBCASE("Z2 on itself is transitive and free") {
    Category z2cat = one_object_group(Group::cyclic(2));
    Cocycle id = validate_cocycle(z2cat, Group::cyclic(2), {0, 1});
    CatAction a = cocycle_action(z2cat, id);
    OrbitsResult r = orbits_and_stabilizers(z2cat, a);
    CHECK(r.transitive);
    for (auto& s : r.stabilizers) CHECK(s.size() == 1);  // just the identity
  }
  SUBCASE("pair groupoid with the trivial cocycle into Z2: two orbits") {
    Category pg = pair_groupoid();
    CatAction a = cocycle_action(pg, trivial_cocycle(pg, Group::cyclic(2)));
    OrbitsResult r = orbits_and_stabilizers(pg, a);
    CHECK(r.orbits.size() == 2);
    CHECK_FALSE(r.transitive);
  }
  SUBCASE("trivial group: transitive iff connected; stabilizer is the isotropy") {
    Category pg = pair_groupoid();
    CatAction a = cocycle_action(pg, trivial_cocycle(pg, Group::trivial()));
    OrbitsResult r = orbits_and_stabilizers(pg, a);
    CHECK(r.transitive == pg.is_connected());
    CHECK(r.stabilizers[0].size() == 1);  // trivial isotropy of the pair groupoid
  }
}

TEST_CASE("morphisms between orbits exist iff the stabilizers nest") {
  // Inside one cocycle action, an equivariant map of the orbit of v into the
  // orbit of u sending v to u propagates along morphisms; it closes up
  // exactly when S_v is contained in S_u.
  Category g4 = one_object_group(Group::cyclic(4));
  Cocycle eta = validate_cocycle(g4, Group::cyclic(2), {0, 1, 0, 1});
  CatAction act = cocycle_action(g4, eta);
  OrbitsResult orb = orbits_and_stabilizers(g4, act);
  int np = (int)act.point_names.size();
  auto equivariant_map_exists = [&](int v, int u) {
    std::vector<int> phi(np, -1);
    phi[v] = u;
    std::vector<int> queue = {v};
    for (size_t qi = 0; qi < queue.size(); ++qi)
      for (int m = 0; m < g4.num_morphisms(); ++m) {
        int from = queue[qi];
        if (act.act[m][from] < 0) continue;
        int to = act.act[m][from], image = act.act[m][phi[from]];
        if (phi[to] < 0) {
          phi[to] = image;
          queue.push_back(to);
        } else if (phi[to] != image) {
          return false;
        }
      }
    return true;
  };
  for (int v = 0; v < np; ++v)
    for (int u = 0; u < np; ++u) {
      if (act.fiber_of[v] != act.fiber_of[u]) continue;
      bool nested = std::includes(orb.stabilizers[u].begin(), orb.stabilizers[u].end(),
                                  orb.stabilizers[v].begin(), orb.stabilizers[v].end());
      CHECK(equivariant_map_exists(v, u) == nested);
    }
}

TEST_CASE("deck transformations") {
  SUBCASE("a connected skew covering of Z4 by Z2 has deck group of order 2") {
    Category z4cat = one_object_group(Group::cyclic(4));
    // eta = reduction mod 2; the isotropy image is all of Z2, so the total
    // space is connected
    Cocycle eta = validate_cocycle(z4cat, Group::cyclic(2), {0, 1, 0, 1});
    SkewProduct sp = skew_product(z4cat, eta);
    REQUIRE(sp.cat.is_connected());
    DeckGroup deck = deck_transformations(sp.cat, sp.base, sp.projection);
    CHECK(deck.elements.size() == 2);
    CHECK(deck.group.order() == 2);
  }
  SUBCASE("the trivial group gives the trivial deck group") {
    Category pg = pair_groupoid();
    SkewProduct sp = skew_product(pg, trivial_cocycle(pg, Group::trivial()));
    DeckGroup deck = deck_transformations(sp.cat, sp.base, sp.projection);
    CHECK(deck.elements.size() == 1);
  }
  SUBCASE("the disconnected pair covering contains the right translation") {
    SkewProduct sp = pair_skew_z2();
    REQUIRE(sp.cat.connected_components().size() == 2);
    DeckGroup deck = deck_transformations(sp.cat, sp.base, sp.projection);
    Group z2 = Group::cyclic(2);
    CatFunctor tr;
    tr.vmap.resize(sp.cat.num_vertices());
    tr.mmap.resize(sp.cat.num_morphisms());
    for (int m = 0; m < sp.cat.num_morphisms(); ++m)
      tr.mmap[m] = sp.pair(sp.base_of(m), z2.mul(sp.elem_of(m), 1));
    for (int v = 0; v < sp.cat.num_vertices(); ++v) tr.vmap[v] = tr.mmap[v];
    bool found = false;
    for (auto& e : deck.elements)
      if (e.mmap == tr.mmap) found = true;
    CHECK(found);
  }
}
