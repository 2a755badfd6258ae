#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace semiwkb::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kNumerical = 2 };

/// Runs the command line `args` (program name excluded). Records go to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace semiwkb::cli
