#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace turan::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitInput = 2,
  kExitSolver = 3,
  kExitBoundViolation = 4,
  kExitCounterexample = 5,
};

/// Runs one command line (without the program name) and returns the exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace turan::cli
