#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lcsc/testing.hpp"

namespace lcsc {

// Property-suite runner. A suite executes seeded fixtures against one named
// invariant; failures are data, not exceptions. Identical configs produce
// byte-identical reports.
struct SuiteConfig {
  uint64_t seed = 1;
  // fixture counts as a percentage of the acceptance-scale counts
  int scale = 100;
  int max_morphisms = 40;
  int max_group_order = 8;
  uint64_t battery_bound = 50000000;
  testing::Mutant mutant = testing::Mutant::None;
};

struct SuiteResult {
  std::string id;
  std::string description;
  int fixtures = 0;
  int passed = 0;
  int failed = 0;
  std::string counterexample;  // first failure, empty when green
};

std::vector<std::string> suite_ids();
SuiteResult run_suite(const std::string& id, const SuiteConfig& config);
std::vector<SuiteResult> run_all_suites(const SuiteConfig& config);

std::string report_to_json(const SuiteConfig& config, const std::vector<SuiteResult>& results);

}  // namespace lcsc
