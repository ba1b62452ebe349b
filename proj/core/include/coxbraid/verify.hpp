#pragma once

#include <string>
#include <vector>

#include "coxbraid/report.hpp"

namespace coxbraid {

// Named verification suites behind the `verify` command and the acceptance
// battery. Each suite replays a family of identities and inclusions over
// configurable types; failures are reported as element words.
struct SuiteConfig {
  std::vector<std::string> types;  // empty: per-suite default list
  int rank_cap = 4;
  int jobs = 1;
};

struct SuiteResult {
  std::string name;
  bool pass = false;
  long checks = 0;
  std::vector<std::string> counterexamples;
  std::string details;
};

std::vector<std::string> suite_names();
bool is_suite_name(const std::string& name);
SuiteResult run_suite(const std::string& name, const SuiteConfig& config = {});

}  // namespace coxbraid
