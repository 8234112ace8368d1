// Acceptance gate: runs every property suite at full scale and reports one
// line per criterion. Exits nonzero when any criterion fails.

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <map>
#include <string>
#include <vector>

#include "lcsc/suite.hpp"

using namespace lcsc;

namespace {

struct Criterion {
  const char* name;
  const char* summary;
  std::vector<const char*> suites;
};

const Criterion kCriteria[] = {
    {"criterion-1", "skew soundness: validation, LC, and the join formula on 200 seeded fixtures",
     {"a1-skew-soundness"}},
    {"criterion-2", "Gross-Tucker round trips on 100 seeded free actions",
     {"a2-gross-tucker", "m3-skew-action"}},
    {"criterion-3", "quotient ideal-intersection identity on all pairs", {"a3-quotient-ideals"}},
    {"criterion-4", "connectedness agreement: union-find vs pi-image on 200 seeded triples",
     {"a4-connectivity-agreement"}},
    {"criterion-5", "seven-criteria agreement on 100 seeded groupoids plus the dihedral surrogate",
     {"a5-seven-criteria"}},
    {"criterion-6", "universal-group invariants: raw vs F(S)*pi plus the named cases",
     {"a6-universal-group"}},
    {"criterion-7", "covering layer: projections, transformation categories, deck groups",
     {"a7-covering-layer"}},
    {"criterion-8", "Zappa-Szep: trivial-phi tables and the exchange isomorphism",
     {"a8-zappa-szep"}},
    {"criterion-9", "mutation sensitivity: three seeded mutants are caught",
     {"a9-mutation-sensitivity"}},
};

}  // namespace

int main(int argc, char** argv) {
  SuiteConfig cfg;
  cfg.seed = 1;
  cfg.scale = 100;
  for (int i = 1; i + 1 < argc; i += 2) {
    if (!std::strcmp(argv[i], "--seed")) cfg.seed = std::strtoull(argv[i + 1], nullptr, 10);
    if (!std::strcmp(argv[i], "--scale")) cfg.scale = std::atoi(argv[i + 1]);
  }

  std::map<std::string, SuiteResult> results;
  for (auto& id : suite_ids()) results[id] = run_suite(id, cfg);

  // the supporting module suites must hold as well
  bool support_ok = true;
  for (auto& [id, r] : results) {
    if (id[0] == 'm' && r.failed > 0) {
      support_ok = false;
      std::printf("FAIL %-12s %s (%d/%d fixtures) %s\n", id.c_str(), r.description.c_str(),
                  r.passed, r.fixtures, r.counterexample.c_str());
    }
  }

  int bad = support_ok ? 0 : 1;
  for (auto& c : kCriteria) {
    int fixtures = 0, passed = 0;
    std::string counterexample;
    for (auto* sid : c.suites) {
      const SuiteResult& r = results.at(sid);
      fixtures += r.fixtures;
      passed += r.passed;
      if (counterexample.empty()) counterexample = r.counterexample;
    }
    bool ok = passed == fixtures;
    std::printf("%s %s: %s (%d/%d fixtures)%s%s\n", ok ? "PASS" : "FAIL", c.name, c.summary,
                passed, fixtures, counterexample.empty() ? "" : " -- ",
                counterexample.c_str());
    if (!ok) ++bad;
  }
  return bad == 0 ? 0 : 1;
}
