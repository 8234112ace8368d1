#include <doctest.h>

#include <algorithm>

#include "lcsc/category.hpp"
#include "lcsc/cocycle.hpp"
#include "lcsc/fixtures.hpp"
#include "lcsc/io.hpp"
#include "lcsc/skew.hpp"
#include "lcsc/zappa.hpp"

using namespace lcsc;

namespace {

CategorySpec pair_spec() {
  CategorySpec s;
  s.vertices = {"x", "y"};
  s.morphisms = {{"x", "x", "x"}, {"y", "y", "y"}, {"a", "x", "y"}, {"abar", "y", "x"}};
  s.identities = {{"x", "x"}, {"y", "y"}};
  s.compose = {{"x", "x", "x"},       {"y", "y", "y"},    {"a", "x", "a"},
               {"y", "a", "a"},       {"abar", "y", "abar"}, {"x", "abar", "abar"},
               {"a", "abar", "y"},    {"abar", "a", "x"}};
  return s;
}

}  // namespace

TEST_CASE("pair groupoid validates") {
  Category c = validate_category(pair_spec());
  CHECK(c.num_vertices() == 2);
  CHECK(c.num_morphisms() == 4);
  int a = c.morphism_by_name("a");
  int abar = c.morphism_by_name("abar");
  CHECK(*c.compose(a, abar) == c.identity(c.vertex_by_name("y")));
  CHECK(*c.compose(abar, a) == c.identity(c.vertex_by_name("x")));
}

TEST_CASE("deleting an identity-law triple reports MissingComposite") {
  CategorySpec s = pair_spec();
  s.compose.erase(std::remove(s.compose.begin(), s.compose.end(),
                              std::array<std::string, 3>{"a", "x", "a"}),
                  s.compose.end());
  try {
    validate_category(s);
    FAIL("expected MissingComposite");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::MissingComposite);
    CHECK(std::string(e.what()).find("(a, x)") != std::string::npos);
  }
}

TEST_CASE("arrow category validates") {
  Category c = arrow_category();
  CHECK(c.num_morphisms() == 3);
  CHECK(c.is_connected());
}

TEST_CASE("duplicate ids are rejected") {
  CategorySpec s = pair_spec();
  s.morphisms.push_back({"a", "x", "x"});
  CHECK_THROWS_AS(validate_category(s), Error);
}

TEST_CASE("left cancellativity") {
  CHECK(is_left_cancellative(pair_groupoid()).left_cancellative);
  CHECK(is_left_cancellative(arrow_category()).left_cancellative);

  // one-object monoid {1, z} with z*z = z
  CategoryTable t;
  int v = t.add_vertex("*", "1");
  int z = t.add_morphism("z", v, v);
  t.set_compose(z, z, z);
  Category m = std::move(t).finalize();
  auto r = is_left_cancellative(m);
  REQUIRE_FALSE(r.left_cancellative);
  auto [al, be, ga] = *r.witness;
  CHECK(al == z);
  CHECK(*m.compose(al, be) == *m.compose(al, ga));
  CHECK(be != ga);
  CHECK(((be == z && ga == v) || (be == v && ga == z)));
}

TEST_CASE("invertibles and the equivalence classes") {
  Category pg = pair_groupoid();
  auto inv = invertibles_and_equivalence(pg);
  CHECK(inv.invertibles.size() == 4);
  REQUIRE(inv.classes.size() == 2);
  auto names = [&](int cls) {
    std::vector<std::string> out;
    for (int m : inv.classes[cls]) out.push_back(pg.morphism_name(m));
    return out;
  };
  CHECK(names(0) == std::vector<std::string>{"x", "abar"});
  CHECK(names(1) == std::vector<std::string>{"y", "a"});

  Category ar = arrow_category();
  auto inv2 = invertibles_and_equivalence(ar);
  CHECK(inv2.invertibles == std::vector<int>{0, 1});
  CHECK(inv2.classes.size() == 3);

  Category z2 = one_object_group(Group::cyclic(2));
  auto inv3 = invertibles_and_equivalence(z2);
  CHECK(inv3.invertibles.size() == 2);
  CHECK(inv3.classes.size() == 1);
}

TEST_CASE("connected components") {
  CHECK(arrow_category().connected_components().size() == 1);

  // disjoint union of the arrow category and an isolated vertex
  CategoryTable t;
  int u = t.add_vertex("u");
  int v = t.add_vertex("v");
  t.add_vertex("w");
  t.add_morphism("e", v, u);
  Category c = std::move(t).finalize();
  auto blocks = c.connected_components();
  REQUIRE(blocks.size() == 2);
  CHECK(blocks[0] == std::vector<int>{0, 1});
  CHECK(blocks[1] == std::vector<int>{2});

  // skew product of the pair groupoid by Z2 with eta(a) = 1
  Category pg = pair_groupoid();
  Group z2 = Group::cyclic(2);
  Cocycle eta = validate_cocycle(pg, z2, {0, 0, 1, 1});
  SkewProduct sp = skew_product(pg, eta);
  CHECK(sp.cat.connected_components().size() == 2);
}

TEST_CASE("cocycle validation") {
  Category pg = pair_groupoid();

  SUBCASE("into the symbolic free group of rank 1") {
    Group z = Group::free_group(1);
    int one = z.intern({1}), minus = z.intern({-1});
    Cocycle eta = validate_cocycle(pg, z, {0, 0, one, minus});
    CHECK(eta.image.size() == 3);  // {0, 1, -1}
    CHECK(eta.nondegenerate == true);
  }

  SUBCASE("non-functorial table is rejected with a witness pair") {
    Category z2cat = one_object_group(Group::cyclic(2));
    Group z3 = Group::cyclic(3);
    int g = z2cat.morphism_by_name("g:1");
    std::vector<int> values(z2cat.num_morphisms(), 0);
    values[g] = 1;  // value(g g) = unit != d^2
    try {
      validate_cocycle(z2cat, z3, values);
      FAIL("expected NotFunctorial");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::NotFunctorial);
    }
  }

  SUBCASE("trivial target is trivially nondegenerate") {
    Cocycle eta = trivial_cocycle(pg, Group::trivial());
    CHECK(eta.nondegenerate == true);
  }

  SUBCASE("vertex values must be the unit") {
    Group z2 = Group::cyclic(2);
    try {
      validate_cocycle(pg, z2, {1, 0, 1, 1});
      FAIL("expected VertexNotUnit");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::VertexNotUnit);
    }
  }
}

TEST_CASE("serialization round-trips bit-identically") {
  for (const Category& c : {pair_groupoid(), arrow_category(), parallel_arrows()}) {
    std::string s1 = category_to_json(c);
    std::string s2 = category_to_json(category_from_json(s1));
    CHECK(s1 == s2);
  }
}

TEST_CASE("identity inference without a declared identities block") {
  CategorySpec s = pair_spec();
  s.identities.clear();
  Category c = validate_category(s);
  CHECK(c.identity(c.vertex_by_name("x")) == c.morphism_by_name("x"));
}

TEST_CASE("budgeted views refuse invertibles") {
  PathCategory pc = path_category(one_loop_graph(), 3);
  try {
    invertibles_and_equivalence(pc.cat);
    FAIL("expected BudgetedUnsupported");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::BudgetedUnsupported);
  }
}
