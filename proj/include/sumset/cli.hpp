#pragma once

#include <iosfwd>

namespace sumset {

/// Exit codes: 0 success, 1 verification failure, 2 usage error,
/// 3 infeasible mathematical precondition.
enum ExitCode : int {
  kExitOk = 0,
  kExitViolation = 1,
  kExitUsage = 2,
  kExitInfeasible = 3,
};

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sumset
