#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hyperpoly::cli {

enum ExitCode : int { kOk = 0, kPropertyFailed = 1, kInvalid = 2, kUndecided = 3 };

/// Runs one command line (without the program name). Results go to `out`,
/// diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hyperpoly::cli
