#ifndef POLYPART_CLI_HPP
#define POLYPART_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace polypart::cli {

enum ExitCode : int { Success = 0, VerificationFailure = 1, UsageError = 2 };

/// Runs one command; `args` excludes the program name.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace polypart::cli

#endif
