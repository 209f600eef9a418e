#pragma once

#include <iosfwd>

namespace seqnorm::cli {

/// Exit codes of the seqnorm command.
enum ExitCode : int {
  kOk = 0,
  kVerifyFailed = 1,
  kUsage = 2,
  kEvaluation = 3,
  kInconclusive = 4,
};

/// Runs one command (argv[0] is the program name). All output goes to the
/// given streams.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace seqnorm::cli
