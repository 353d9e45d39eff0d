#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bott::cli {

enum ExitCode : int {
  kSuccess = 0,
  kParseError = 2,
  kPrecondition = 3,
  kMismatch = 4,
};

/// Runs the command line (args[0] is the program name) and returns the exit
/// status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bott::cli
