#pragma once

#include <string>
#include <vector>

namespace taut {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct CheckOptions {
  int order = 12;
  /// Corrupts one input of the theta identity so that its check must fail.
  bool inject_fault = false;
};

/// The full verification battery behind `tautcalc verify`.
std::vector<CheckResult> run_checks(const CheckOptions& options);

}  // namespace taut
