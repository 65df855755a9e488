#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace shannon::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kVerifyFail = 2,
  kBudgetExhausted = 3,
  kMalformedInput = 4,
};

/// Runs one command line (without the program name). Results go to out,
/// diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace shannon::cli
