#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rsplit::cli {

/// Exit codes: 0 true/success, 1 false/property failure, 2 parse or usage error.
enum ExitCode : int { kTrue = 0, kFalse = 1, kUsage = 2 };

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rsplit::cli
