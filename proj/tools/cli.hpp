#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fcomplex::cli {

enum ExitCode : int {
  kSuccess = 0,
  kUsage = 1,
  kInput = 2,   // unreadable or unparsable input
  kDomain = 3,  // input parsed but violates a constraint of the computation
};

/// Runs the command line `args` (args[0] is the program name) and returns the
/// process exit code. Regular output goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fcomplex::cli
