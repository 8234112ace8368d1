#include <doctest.h>

#include "lcsc/alignment.hpp"
#include "lcsc/fixtures.hpp"
#include "lcsc/zappa.hpp"

using namespace lcsc;

namespace {

std::vector<std::string> names(const Category& c, const std::vector<int>& ms) {
  std::vector<std::string> out;
  for (int m : ms) out.push_back(c.morphism_name(m));
  return out;
}

}  // namespace

TEST_CASE("principal ideals") {
  Category pg = pair_groupoid();
  CHECK(names(pg, principal_ideal(pg, pg.morphism_by_name("a"))) ==
        std::vector<std::string>{"y", "a"});

  Category ar = arrow_category();
  CHECK(names(ar, principal_ideal(ar, ar.morphism_by_name("e"))) ==
        std::vector<std::string>{"e"});

  PathCategory two = path_category(two_loop_graph(), 2);
  CHECK(names(two.cat, principal_ideal(two.cat, two.cat.morphism_by_name("a"))) ==
        std::vector<std::string>{"a", "aa", "ab"});
}

TEST_CASE("pairwise joins") {
  PathCategory two = path_category(two_loop_graph(), 2);
  int a = two.cat.morphism_by_name("a"), b = two.cat.morphism_by_name("b");
  CHECK(join(two.cat, a, b).empty());
  CHECK(join(two.cat, a, a) == std::vector<int>{a});

  PathCategory loop = path_category(one_loop_graph(), 3);
  int s = loop.cat.morphism_by_name("s"), ss = loop.cat.morphism_by_name("ss");
  CHECK(join(loop.cat, s, ss) == std::vector<int>{ss});
}

TEST_CASE("family joins") {
  PathCategory two = path_category(two_loop_graph(), 2);
  int a = two.cat.morphism_by_name("a"), b = two.cat.morphism_by_name("b");
  CHECK(join_family(two.cat, {a}) == std::vector<int>{a});
  CHECK(join_family(two.cat, {a, b}).empty());

  // aC n yC = yC in the pair groupoid; a ~ y, one canonical representative
  Category pg = pair_groupoid();
  int pa = pg.morphism_by_name("a"), py = pg.morphism_by_name("y");
  auto fam = join_family(pg, {pa, py});
  REQUIRE(fam.size() == 1);
  // the class of the generator is {y, a}; the canonical pick is the
  // lexicographically least id
  CHECK(pg.morphism_name(fam[0]) == "a");
  Bitset un = principal_ideal_bits(pg, fam[0]);
  CHECK(un == principal_ideal_bits(pg, py));

  try {
    join_family(pg, {});
    FAIL("expected EmptyFamily");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::EmptyFamily);
  }
}

TEST_CASE("exhaustive sets on the two-loop window") {
  PathCategory two = path_category(two_loop_graph(), 2);
  int v = two.cat.vertex_by_name("v");
  int a = two.cat.morphism_by_name("a"), b = two.cat.morphism_by_name("b");

  CHECK(is_exhaustive(two.cat, v, {a, b}).exhaustive);

  auto r = is_exhaustive(two.cat, v, {a});
  CHECK_FALSE(r.exhaustive);
  CHECK(two.cat.morphism_name(*r.witness) == "b");

  auto empty = is_exhaustive(two.cat, v, {});
  CHECK_FALSE(empty.exhaustive);
  CHECK(*empty.witness == two.cat.identity(v));
}

TEST_CASE("exhaustive set members must sit at the vertex") {
  Category pg = pair_groupoid();
  try {
    is_exhaustive(pg, pg.vertex_by_name("x"), {pg.morphism_by_name("a")});
    FAIL("expected FNotAtVertex");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::FNotAtVertex);
  }
}

TEST_CASE("independence") {
  PathCategory two = path_category(two_loop_graph(), 2);
  int a = two.cat.morphism_by_name("a"), b = two.cat.morphism_by_name("b");
  int aa = two.cat.morphism_by_name("aa");
  CHECK(is_independent(two.cat, {a, b}).independent);
  CHECK(is_independent(two.cat, {a}).independent);
  auto r = is_independent(two.cat, {a, aa});
  REQUIRE_FALSE(r.independent);
  CHECK(r.witness->first == aa);
  CHECK(r.witness->second == a);
}

TEST_CASE("join oracle on a small explicit category") {
  // every pair: the join generates exactly the ideal intersection
  Category pg = pair_times_group(2, Group::cyclic(3));
  auto ideals = ideal_table(pg);
  for (int a = 0; a < pg.num_morphisms(); ++a)
    for (int b = 0; b < pg.num_morphisms(); ++b) {
      auto j = join(pg, a, b, ideals);
      Bitset u(pg.num_morphisms());
      for (int m : j) u |= ideals[m];
      CHECK(u == (ideals[a] & ideals[b]));
      CHECK(is_independent(pg, j).independent);
    }
}
