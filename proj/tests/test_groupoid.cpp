#include <doctest.h>

#include "lcsc/fixtures.hpp"
#include "lcsc/groupoid.hpp"
#include "lcsc/io.hpp"
#include "lcsc/zappa.hpp"

using namespace lcsc;

TEST_CASE("maximal trees and retractions on the pair groupoid") {
  Groupoid g = as_groupoid(pair_groupoid());
  int x = g.cat.vertex_by_name("x");
  MaximalTree tree = maximal_tree(g, x);
  CHECK(tree.t[x] == g.cat.identity(x));
  CHECK(g.cat.morphism_name(tree.t[g.cat.vertex_by_name("y")]) == "a");

  Retraction r = retraction_from_tree(g, tree);
  CHECK(r.isotropy.order() == 1);
  // the retraction sends abar to the unit of the trivial isotropy
  CHECK(r.cocycle(g.cat.morphism_by_name("abar")) == 0);

  MaximalTree back = tree_from_retraction(g, r);
  CHECK(back.t == tree.t);
}

TEST_CASE("a group as a one-object groupoid retracts trivially") {
  Groupoid g = as_groupoid(one_object_group(Group::cyclic(3)));
  MaximalTree tree = maximal_tree(g, 0);
  CHECK(tree.t == std::vector<int>{g.cat.identity(0)});
  Retraction r = retraction_from_tree(g, tree);
  for (int m = 0; m < g.cat.num_morphisms(); ++m)
    CHECK(r.elem_to_morph[r.cocycle(m)] == m);  // identity map
}

TEST_CASE("theta decomposition is an isomorphism") {
  Groupoid g = as_groupoid(pair_times_group(3, Group::cyclic(2)));
  CHECK(decomposition_is_isomorphism(g, maximal_tree(g, 1)));
}

TEST_CASE("non-groupoids are rejected") {
  try {
    as_groupoid(arrow_category());
    FAIL("expected NotGroupoid");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotGroupoid);
  }
}

TEST_CASE("fundamental groups") {
  SUBCASE("pair groupoid: trivial") {
    FpGroup p = fundamental_group(pair_groupoid(), 0);
    FpInvariants inv = fp_invariants(p);
    CHECK(inv.abelian.empty());
    for (auto h : inv.hom_counts) CHECK(h == 1);
  }
  SUBCASE("one-loop path category: free of rank 1") {
    PathCategory loop = path_category(one_loop_graph(), 3);
    FpGroup p = fundamental_group(loop.cat, 0);
    FpInvariants inv = fp_invariants(p);
    CHECK(inv.abelian == std::vector<int64_t>{0});
    CHECK(inv.hom_counts == std::vector<uint64_t>{2, 3, 6, 4, 4, 8});
  }
  SUBCASE("parallel arrows: free of rank 1") {
    FpGroup p = fundamental_group(parallel_arrows(), 0);
    FpInvariants inv = fp_invariants(p);
    CHECK(inv.abelian == std::vector<int64_t>{0});
    CHECK(inv.hom_counts == std::vector<uint64_t>{2, 3, 6, 4, 4, 8});
  }
  SUBCASE("disconnected input is rejected") {
    CategoryTable t;
    t.add_vertex("u");
    t.add_vertex("w");
    Category c = std::move(t).finalize();
    CHECK_THROWS_AS(fundamental_group(c, 0), Error);
  }
}

TEST_CASE("universal groups") {
  SUBCASE("Z2 as a one-object category") {
    FpGroup u = universal_group(one_object_group(Group::cyclic(2)), UniversalMode::Raw);
    FpGroup expected{{"g"}, {{1, 1}}};
    CHECK(fp_invariants(u) == fp_invariants(expected));
  }
  SUBCASE("pair groupoid: free of rank 1 via the connected mode") {
    FpGroup u = universal_group(pair_groupoid(), UniversalMode::Connected, 0);
    FpInvariants inv = fp_invariants(u);
    CHECK(inv.abelian == std::vector<int64_t>{0});
    CHECK(inv.hom_counts == std::vector<uint64_t>{2, 3, 6, 4, 4, 8});
  }
  SUBCASE("free monoid on two generators: free of rank 2") {
    PathCategory two = path_category(two_loop_graph(), 4);
    FpGroup u = universal_group(two.cat, UniversalMode::Raw);
    FpGroup expected{{"a", "b"}, {}};
    CHECK(fp_invariants(u) == fp_invariants(expected));
  }
  SUBCASE("components mode on a disjoint union of groupoids") {
    // pair groupoid + Z2: U = F1 * Z2
    CategoryTable t;
    int x = t.add_vertex("x"), y = t.add_vertex("y");
    int w = t.add_vertex("w", "e");
    int a = t.add_morphism("a", x, y), abar = t.add_morphism("abar", y, x);
    int gm = t.add_morphism("g", w, w);
    t.set_compose(a, abar, y);
    t.set_compose(abar, a, x);
    t.set_compose(gm, gm, w);
    Category c = std::move(t).finalize();
    FpGroup u = universal_group(c, UniversalMode::Components);
    FpGroup expected{{"t", "g"}, {{2, 2}}};  // F1 * Z2
    CHECK(fp_invariants(u) == fp_invariants(expected));
  }
}

TEST_CASE("fp invariants of the named presentations") {
  FpGroup free2{{"a", "b"}, {}};
  FpInvariants f2 = fp_invariants(free2);
  CHECK(f2.abelian == std::vector<int64_t>({0, 0}));
  CHECK(f2.hom_counts[2] == 36);  // S3

  FpGroup z2{{"g"}, {{1, 1}}};
  FpInvariants i2 = fp_invariants(z2);
  CHECK(i2.abelian == std::vector<int64_t>{2});
  CHECK(i2.hom_counts[2] == 4);  // S3: identity and the three transpositions

  FpGroup trivial{{}, {}};
  FpInvariants it = fp_invariants(trivial);
  CHECK(it.abelian.empty());
  for (auto h : it.hom_counts) CHECK(h == 1);
}

TEST_CASE("the battery bound is enforced") {
  FpGroup big;
  for (int i = 0; i < 30; ++i) big.generators.push_back("g" + std::to_string(i));
  big.relators.push_back({1, 1, 1, 1, 1, 1, 1});  // not Tietze-removable
  try {
    hom_count(big, Group::dihedral(4), 50000000);
    FAIL("expected BatteryTooLarge");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::BatteryTooLarge);
  }
}

TEST_CASE("connectivity reports") {
  SUBCASE("pair groupoid, eta(a) = 1 into Z2: disconnected") {
    Category pg = pair_groupoid();
    Cocycle eta = validate_cocycle(pg, Group::cyclic(2), {0, 0, 1, 1});
    ConnectivityReport r = skew_connectivity_report(pg, eta);
    CHECK(r.nondegenerate);
    CHECK_FALSE(r.direct);
    CHECK_FALSE(r.via_pi);
  }
  SUBCASE("one-loop window, eta(s) = 1 into Z2: connected") {
    PathCategory loop = path_category(one_loop_graph(), 3);
    Cocycle eta = edge_cocycle(loop, Group::cyclic(2), {1});
    ConnectivityReport r = skew_connectivity_report(loop.cat, eta);
    CHECK(r.direct);
    CHECK(r.via_pi);
  }
  SUBCASE("trivial group: connected") {
    Category pg = pair_groupoid();
    ConnectivityReport r = skew_connectivity_report(pg, trivial_cocycle(pg, Group::trivial()));
    CHECK(r.direct);
    CHECK(r.via_pi);
  }
}

TEST_CASE("seven criteria") {
  SUBCASE("Z2 with the identity cocycle: all true") {
    Groupoid g = as_groupoid(one_object_group(Group::cyclic(2)));
    Cocycle psi = validate_cocycle(g.cat, Group::cyclic(2), {0, 1});
    SevenCriteria sc = seven_criteria_check(g, psi);
    CHECK(sc.agree);
    for (bool b : sc.criteria) CHECK(b);
  }
  SUBCASE("trivial cocycle into the trivial group: all true") {
    Groupoid g = as_groupoid(pair_groupoid());
    SevenCriteria sc = seven_criteria_check(g, trivial_cocycle(g.cat, Group::trivial()));
    CHECK(sc.agree);
    for (bool b : sc.criteria) CHECK(b);
  }
  SUBCASE("the dihedral surrogate: surjective yet all false") {
    GroupoidCocycleFixture f = dihedral_surrogate();
    CHECK(f.psi.image.size() == 8);
    CHECK(skew_component_count(f.groupoid.cat, f.psi) == 2);
    SevenCriteria sc = seven_criteria_check(f.groupoid, f.psi);
    CHECK(sc.agree);
    for (bool b : sc.criteria) CHECK_FALSE(b);
  }
  SUBCASE("degenerate cocycles are rejected") {
    Groupoid g = as_groupoid(pair_groupoid());
    try {
      seven_criteria_check(g, trivial_cocycle(g.cat, Group::cyclic(2)));
      FAIL("expected Degenerate");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::Degenerate);
    }
  }
}

TEST_CASE("fp groups serialize with a rendering") {
  FpGroup p{{"g"}, {{1, 1}}};
  std::string j = fpgroup_to_json(p);
  CHECK(j.find("⟨") != std::string::npos);
  FpGroup q = fpgroup_from_json(j);
  CHECK(q.generators == p.generators);
  CHECK(q.relators == p.relators);
}
