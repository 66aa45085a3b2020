#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace fracplast::cli {

enum ExitCode : int {
  kOk = 0,
  kConfigError = 1,
  kSolverFailure = 2,
  kVerificationFailure = 3,
};

/// Environment variable naming the default output root.
inline constexpr const char* kOutputRootEnv = "FRACPLAST_OUTPUT_ROOT";

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Convenience overload; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fracplast::cli
