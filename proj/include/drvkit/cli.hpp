#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace drvkit {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitAssertion = 1,
  kExitValidation = 2,
  kExitUsage = 64,
  kExitIo = 66,
};

/// Runs one CLI invocation. `args` excludes the program name. Reports go to
/// `out` (or to --out), diagnostics and usage text to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace drvkit
