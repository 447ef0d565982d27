#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mphide::cli {

// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kFailure = 1,  // I/O and other unexpected errors
  kParseError = 2,
  kPairError = 3,  // NotCoprime / BadOrder
  kSingular = 4,
  kVerificationFailed = 5,
  kBudgetExhausted = 6,
  kKeyError = 7,
};

// Runs one invocation. `args` excludes the program name. Output and
// diagnostics go to the given streams so tests can run commands in process.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mphide::cli
