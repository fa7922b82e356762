#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace coxeter::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kOk = 0,
  kRefuted = 1,
  kIncomplete = 2,
  kInputError = 3,
};

/// Graph of the built-in counterexample: rank 7, I = {4,5}.
extern const char* const kCounterexampleGraph;

/// Runs the command line `args` (without the program name), writing normal
/// output to `out` and diagnostics to `err`. Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace coxeter::cli
