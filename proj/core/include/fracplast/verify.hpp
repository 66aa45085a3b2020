#pragma once

// Self-check battery over the kernel, stencils, kinematics identities and
// the plasticity update.  Backs the `verify` subcommand.

#include <cstdint>
#include <string>
#include <vector>

namespace fracplast {

struct VerifyOptions {
  /// Relative perturbation applied to every quadrature weight in the
  /// kernel and stencil checks (fault injection).  0 disables it.
  double perturb_weights = 0.0;
  std::uint64_t seed = 20130801;
};

struct CheckResult {
  std::string name;
  double value = 0.0;      ///< observed worst-case deviation
  double tolerance = 0.0;  ///< pass iff value <= tolerance
  bool passed = false;
};

std::vector<CheckResult> run_verification(const VerifyOptions& options = {});

/// Fixed-width pass/fail table.
std::string format_report(const std::vector<CheckResult>& results);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace fracplast
