#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace foliage {

// Exit codes of the command-line tool.
enum ExitCode : int { kExitOk = 0, kExitFailure = 1, kExitUsage = 2 };

// Runs the tool on args (without the program name), writing reports to out and
// diagnostics to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace foliage
