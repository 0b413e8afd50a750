#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace linkhom {

/// Exit codes of the command-line front end.
enum ExitCode : int { kExitOk = 0, kExitDefect = 1, kExitUsage = 2 };

/// Runs the CLI on `args` (without the program name), writing results to
/// `out` and diagnostics to `err`. Usage errors print the synopsis to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace linkhom
