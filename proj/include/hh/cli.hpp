#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hh::cli {

/// Stable process exit codes.
enum ExitCode : int {
  kOk = 0,
  kInternal = 1,      // unexpected failure inside the engine
  kConfig = 2,        // bad flags, unparsable input, violated precondition
  kObstruction = 3,   // the expansion itself is obstructed (logarithmic branch)
  kVerification = 4,  // an oracle check failed
};

/// Runs one command line (without the program name). Artifacts go to `out`
/// (or to the --out file), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Default precision in bits: $HH_PRECISION when set, else 256.
long default_precision();

}  // namespace hh::cli
