#pragma once

#include <string>
#include <vector>

#include "pbz/structures.hpp"

namespace pbz {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;  // witness payloads / instance counts
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;  // stable order
  long long instances = 0;
  double seconds = 0.0;

  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

struct SuiteOptions {
  int max_size = 0;   // 0: suite default
  unsigned seed = 0;  // reserved for randomized suites; enumeration is exhaustive
  int jobs = 4;       // worker pool width
};

// Suites, in acceptance order:
//   chain-congruences, si-chains, exfail12, mainthaol, cghsum, charg, axhsum,
//   small-aol, singleton, con-oracle, implications
const std::vector<std::string>& suite_names();
SuiteReport run_suite(const std::string& name, const SuiteOptions& opt = {});

}  // namespace pbz
