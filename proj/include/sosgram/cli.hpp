#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace sosgram {

/// Process exit codes of the command-line tool.
enum ExitCode : int {
  kExitSuccess = 0,
  kExitMalformedInput = 1,
  kExitPreconditionViolated = 2,  ///< a machine-checkable witness is printed
  kExitInternalError = 3,
};

/// Runs the command line `args` (without the program name). Results go to
/// `out` unless --out names a file; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sosgram
