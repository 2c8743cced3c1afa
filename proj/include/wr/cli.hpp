#pragma once

#include <exception>
#include <iosfwd>
#include <string>
#include <vector>

namespace wr::cli {

enum ExitCode : int {
  kSuccess = 0,
  kUsageError = 1,
  kCapacityError = 2,
  kVerificationMismatch = 3,
  kCounterexample = 4,
};

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Exit status for an error escaping a command.
int exit_code_for(const std::exception& e);

/// "1,1;2,1;10,1;1,1/2" -> activity pairs; ParseError on malformed text.
std::vector<std::pair<std::string, std::string>> split_grid(const std::string& text);

}  // namespace wr::cli
