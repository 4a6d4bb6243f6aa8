#pragma once

#include <string>
#include <vector>

namespace motivic::cli {

/// Outcome of one command invocation: everything the command prints plus the
/// process exit code (0 ok, 1 identity failure, 2 parse/validation error,
/// 3 budget exceeded).
struct RunResult {
  int exit_code = 0;
  std::string output;
};

/// Parses and executes one command line (arguments without the program name).
/// Never throws; failures are rendered into the result.
RunResult run(const std::vector<std::string>& args);

}  // namespace motivic::cli
