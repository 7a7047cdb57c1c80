#pragma once

#include <string>
#include <vector>

namespace dyckmax {

struct CheckResult {
  std::string suite;
  std::string name;
  bool passed = false;
  double measured = 0.0;   // worst observed error, or count of failures
  double tolerance = 0.0;  // threshold the measurement was held to
};

/// Runs one invariant suite (oracle, spectral, identity, rates) or all.
/// Throws std::invalid_argument for an unknown suite name.
std::vector<CheckResult> run_suite(const std::string& suite);

const std::vector<std::string>& suite_names();

}  // namespace dyckmax
