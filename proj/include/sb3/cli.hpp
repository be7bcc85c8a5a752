#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sb3::cli {

/// Exit codes: 0 success / equal / member, 1 negative verdict, 2 usage or
/// input error, 3 the equality methods disagreed (an internal bug).
enum ExitCode : int { kOk = 0, kNegative = 1, kInputError = 2, kInconsistent = 3 };

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sb3::cli
