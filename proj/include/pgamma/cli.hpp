#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pgamma::cli {

/// Stable exit codes.
enum ExitCode : int {
    kSuccess = 0,
    kVerificationFailure = 1,
    kUsageError = 2,
    kNumericalFailure = 3,
};

/// Environment variable naming the directory that relative output paths are
/// resolved against.
inline constexpr const char* kOutputDirEnv = "PGAMMA_OUTPUT_DIR";

/// Runs the command line `args` (without the program name). Results go to
/// `out` unless an output path is given; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace pgamma::cli
