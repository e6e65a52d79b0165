#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace fanochern::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kSuccess = 0,
  kViolations = 1,
  kUsage = 2,
  kIoError = 3,
};

/// Runs the command line `args` (args[0] is the program name), writing normal
/// output to `out` and diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fanochern::cli
