#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace naples::cli {

enum ExitCode : int {
  kSuccess = 0,
  kPredicateFalse = 1,
  kUsageError = 2,
  kCounterexample = 3,
};

/// Runs one command line (without the program name) and returns the exit
/// status. Regular output goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace naples::cli
