#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kr {

enum ExitCode : int {
  kExitOk = 0,
  kExitVerificationFailed = 1,
  kExitUsage = 2,
  kExitScaleExceeded = 3,
};

/// Runs the command line (without the program name) and returns the exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kr
