#include <doctest.h>

#include "lcsc/fixtures.hpp"
#include "lcsc/io.hpp"
#include "lcsc/suite.hpp"

using namespace lcsc;

TEST_CASE("parse errors carry context") {
  CHECK_THROWS_AS(category_from_json("{not json"), Error);
  try {
    category_from_json("{\"vertices\": [\"v\"]}");
    FAIL("expected ParseError");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ParseError);
  }
}

TEST_CASE("group tables are validated on load") {
  // non-associative "table"
  std::string bad = R"({"kind":"table","elements":["e","a","b"],
    "mul":[[0,1,2],[1,2,2],[2,0,1]]})";
  CHECK_THROWS_AS(group_from_json(bad), Error);
  Group z2 = group_from_json(R"({"kind":"table","elements":["0","1"],"mul":[[0,1],[1,0]]})");
  CHECK(z2.order() == 2);
  Group f1 = group_from_json(R"({"kind":"free","rank":1})");
  CHECK_FALSE(f1.is_finite());
}

TEST_CASE("cocycle files validate against the category") {
  Category pg = pair_groupoid();
  Group z2 = Group::cyclic(2);
  Cocycle eta = cocycle_from_json(pg, R"({"values": {"a": "1", "abar": "1"}})", &z2);
  CHECK(eta(pg.morphism_by_name("a")) == 1);
  // non-functorial values are rejected by the validator
  CHECK_THROWS_AS(cocycle_from_json(pg, R"({"values": {"a": "1", "abar": "0"}})", &z2), Error);
}

TEST_CASE("actions round-trip through JSON") {
  Category pg = pair_groupoid();
  GroupAction swap = validate_action(pg, Group::cyclic(2), {{0, 1, 2, 3}, {1, 0, 3, 2}});
  std::string j = action_to_json(pg, swap);
  GroupAction back = action_from_json(pg, j);
  CHECK(back.act == swap.act);
}

TEST_CASE("dot export shapes") {
  std::string arrow = export_dot(arrow_category());
  CHECK(arrow.find("\"v\" -> \"u\"") != std::string::npos);

  Category pg = pair_groupoid();
  std::string dot = export_dot(pg);
  CHECK(dot.find("\"x\" -> \"y\" [label=\"a\"]") != std::string::npos);
  CHECK(dot.find("\"y\" -> \"x\" [label=\"abar\"]") != std::string::npos);

  Cocycle eta = validate_cocycle(pg, Group::cyclic(2), {0, 0, 1, 1});
  SkewProduct sp = skew_product(pg, eta);
  std::string skew_dot = export_dot(sp.cat);
  // 4 vertices, 4 non-identity edges
  int edges = 0;
  for (size_t at = skew_dot.find("->"); at != std::string::npos; at = skew_dot.find("->", at + 1))
    ++edges;
  CHECK(edges == 4);

  std::string cov = export_dot_covering(sp.cat, pg, sp.projection);
  CHECK(cov.find("cluster_total") != std::string::npos);
  CHECK(cov.find("cluster_base") != std::string::npos);
}

TEST_CASE("suite reports are deterministic") {
  SuiteConfig cfg;
  cfg.seed = 77;
  cfg.scale = 3;
  auto r1 = run_all_suites(cfg);
  auto r2 = run_all_suites(cfg);
  CHECK(report_to_json(cfg, r1) == report_to_json(cfg, r2));
  for (auto& r : r1) CHECK(r.failed == 0);
}

TEST_CASE("a zero scale runs no fixtures") {
  SuiteConfig cfg;
  cfg.scale = 0;
  for (auto& r : run_all_suites(cfg)) {
    CHECK(r.fixtures == 0);
    CHECK(r.failed == 0);
  }
}

TEST_CASE("injected mutants are visible in the reports") {
  SuiteConfig cfg;
  cfg.seed = 11;
  cfg.scale = 5;
  cfg.mutant = testing::Mutant::SkewComposabilityFlipped;
  SuiteResult r = run_suite("a1-skew-soundness", cfg);
  CHECK(r.failed > 0);
  CHECK(!r.counterexample.empty());
}

TEST_CASE("category systems load from JSON") {
  std::string text = R"({
    "category": {
      "vertices": ["x", "y"],
      "morphisms": [
        {"id": "x", "src": "x", "rng": "x"}, {"id": "y", "src": "y", "rng": "y"},
        {"id": "a", "src": "x", "rng": "y"}, {"id": "abar", "src": "y", "rng": "x"}
      ],
      "identities": {"x": "x", "y": "y"},
      "compose": [["x","x","x"],["y","y","y"],["a","x","a"],["y","a","a"],
                  ["abar","y","abar"],["x","abar","abar"],["a","abar","y"],["abar","a","x"]]
    },
    "group": {"kind": "table", "elements": ["0", "1"], "mul": [[0,1],[1,0]]},
    "act": {"1": {"x": "y", "y": "x", "a": "abar", "abar": "a"}},
    "phi": {"0": {"a": "0", "abar": "0"}, "1": {"a": "1", "abar": "1"}}
  })";
  CategorySystem sys = system_from_json(text);
  ZsProduct z = zs_product(sys);
  CHECK(z.cat.num_morphisms() == 8);
}
