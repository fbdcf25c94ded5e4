#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace nilchain {

/// Exit statuses of the command-line tool.
enum ExitStatus : int { kExitOk = 0, kExitFailed = 1, kExitUsage = 2 };

/// Runs the tool on args (without the program name), writing results to out
/// and diagnostics to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nilchain
