#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace euler_forge::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitCongruenceFailure = 1,
  kExitUsage = 2,
  kExitNoStabilization = 3,
  kExitCacheSizing = 4,
};

/// Process environment consulted by the CLI.
struct Environment {
  /// Value of EULER_FORGE_THREADS, if set.
  std::optional<std::string> threads;

  static Environment from_process();
};

/// Runs the command line `args` (args[0] is the program name). Reports go to
/// `out`, diagnostics and summaries to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const Environment& env = {});

}  // namespace euler_forge::cli
