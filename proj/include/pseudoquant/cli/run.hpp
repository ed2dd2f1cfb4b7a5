#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pq::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int { kOk = 0, kInputError = 1, kVerificationFailed = 2, kFlagged = 3 };

/// Runs the `pseudoquant` tool on argv[1..], writing results to `out` and
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pq::cli
