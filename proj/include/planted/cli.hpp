#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace planted {

/// Exit codes of the command-line tool.
enum ExitCode : int { kExitOk = 0, kExitFailure = 1, kExitUsage = 2, kExitBudget = 3 };

/// Runs one command line (without the program name), writing results to
/// `out` and diagnostics to `err`. Returns an ExitCode.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace planted
