#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace salg::cli {

/// Exit codes: success, negative answer of a predicate subcommand, usage or
/// parse error.
enum ExitCode : int { kOk = 0, kNegative = 1, kUsage = 2 };

/// Runs one command line (without the program name). Reports go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace salg::cli
