#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace modeq {

enum ExitCode : int { kExitOk = 0, kExitViolation = 1, kExitUsage = 2, kExitBudget = 3 };

/// Runs one subcommand. args excludes the program name.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace modeq
