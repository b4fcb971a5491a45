#pragma once

#include <string>
#include <vector>

namespace superosc {

/// Outcome of one CLI invocation: the emitted document on out, a
/// machine-readable error object ({"error": {"code", "message"}}) on err
/// when the exit code is nonzero.
struct CliResult {
  int exit_code = 0;
  std::string out;
  std::string err;
};

/// Parses and dispatches one invocation (argv without the program name).
/// Exit codes: 0 success, 1 domain error, 2 usage error.
CliResult run_cli(const std::vector<std::string>& args);

}  // namespace superosc
