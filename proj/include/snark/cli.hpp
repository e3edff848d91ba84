#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace snark::cli {

enum ExitCode : int { kOk = 0, kVerifyFailed = 1, kUsage = 2, kUnreachable = 3 };

// Runs one subcommand. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace snark::cli
