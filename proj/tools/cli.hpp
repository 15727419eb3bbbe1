#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hcyl::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int { kOk = 0, kInvalidInput = 1, kFactorizationIncomplete = 2, kInternalError = 3 };

/// Runs the tool on `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hcyl::cli
