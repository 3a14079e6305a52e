#pragma once

#include <iosfwd>

namespace diamclust {

/// Process exit codes of the command-line front end.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitGuaranteeViolation = 2,
  kExitPrecondition = 3,
};

/// Entry point of the `diamclust` tool. JSON goes to `out`, tables and
/// diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace diamclust
