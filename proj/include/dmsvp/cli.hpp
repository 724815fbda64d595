#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dmsvp::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kUsage = 1,         // bad arguments or unparsable input
  kPrecondition = 2,  // rank, threshold, boundedness, domain
  kBudget = 3,        // enumeration budget exceeded
  kFailed = 4,        // a verification found a counterexample
};

/// Runs the command line `args` (without the program name). A FILE argument
/// of "-" reads from `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace dmsvp::cli
