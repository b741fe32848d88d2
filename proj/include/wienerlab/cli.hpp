#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wienerlab::cli {

// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kCounterexample = 1,
  kUsage = 2,
  kInvariantViolation = 3,
  kDomainError = 4,
};

// Runs one invocation. `args` excludes the program name. Errors are written
// to `err` as a single line "error:<code>:<message>".
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wienerlab::cli
