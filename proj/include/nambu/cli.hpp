#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nambu::cli {

enum ExitCode : int { kPass = 0, kVerificationFailed = 1, kUsage = 2, kPrecondition = 3 };

/// Runs the command-line front end. `args` includes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace nambu::cli
