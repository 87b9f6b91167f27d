#pragma once

// Entry point of the xfermi command-line tool, callable in-process.

#include <iosfwd>
#include <string>
#include <vector>

namespace xfermi::cli {

enum ExitCode : int { kSuccess = 0, kUsage = 1, kNumerical = 2 };

/// Parses `args` (without the program name), runs the subcommand and writes
/// the report to `out`, diagnostics to `err`. Returns an ExitCode.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace xfermi::cli
