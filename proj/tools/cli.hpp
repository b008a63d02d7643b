#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace biconn::cli {

enum ExitCode : int { kYes = 0, kNo = 1, kUsage = 2, kBudget = 3, kInternal = 4 };

// Runs one command line (args excludes the program name). The JSON report
// goes to `out`; diagnostics and --explain dumps go to `err`.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace biconn::cli
