#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace horadam {

/// Exit codes of the command-line front end.
enum ExitCode : int { kExitHolds = 0, kExitCounterexample = 1, kExitUsage = 2 };

/// Runs the `horadam` command line. `args` excludes the program name.
/// Reports go to `out` (or the --output file), diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace horadam
