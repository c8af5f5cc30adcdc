#pragma once

// Self-verification: every module invariant as a named pass/fail check.

#include <string>
#include <vector>

namespace wallisqm {

enum class TolProfile { Strict, Relaxed };

struct VerifyConfig {
  TolProfile profile = TolProfile::Strict;
  // Coefficient of a_1 in s_n = 4 n^2 a_n - 3 a_1. Anything but 3 must
  // make the verification fail; used to show the suite is not vacuous.
  double a1_coefficient = 3.0;
};

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Relaxed multiplies every numeric tolerance by 100; strict inequalities
/// (bound sandwiches, monotonicity) are never relaxed.
double tolerance_scale(TolProfile profile);

std::vector<CheckResult> run_verify(const VerifyConfig& config);

}  // namespace wallisqm
