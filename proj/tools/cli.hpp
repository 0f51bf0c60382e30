#pragma once

#include <iosfwd>

namespace relbell::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int { kSuccess = 0, kNumericalFailure = 1, kInvalidArguments = 2 };

/// Environment variable naming the directory that relative --out paths (and
/// default output files) are resolved against.
inline constexpr const char* kOutputDirEnv = "RELBELL_OUTPUT_DIR";

/// Runs the `relbell` command line. Reports go to `out`, diagnostics to `err`;
/// data files are written where --out says ("-" means `out`).
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace relbell::cli
