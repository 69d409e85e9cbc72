#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ore::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
    kSuccess = 0,
    kNegative = 1,
    kUsage = 2,
};

/// Runs the command line `args` (args[0] is the program name). Output goes
/// to `out`, diagnostics to `err`, and `check` reads graph6 lines from `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

} // namespace ore::cli
