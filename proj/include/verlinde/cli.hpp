#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace verlinde {

enum ExitCode { kExitOk = 0, kExitUsage = 1, kExitComputation = 2, kExitMismatch = 3 };

/// Runs the command-line front end on `args` (program name excluded) and
/// returns the process exit code. Results go to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace verlinde
