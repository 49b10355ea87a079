#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace transversal::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,    // mismatch between methods, identity violation, invalid cover
  kUsage = 2,          // bad command line
  kInputError = 3,     // unreadable or malformed file
  kBudgetExceeded = 4, // enumeration refused
  kPrecondition = 5,   // e.g. r != 2 for the twofold suite
};

/// Runs one command; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace transversal::cli
