#pragma once

#include <ostream>

namespace fibdens::cli {

/// Process exit codes.
enum ExitCode : int {
    kOk = 0,
    kVerificationFailed = 1,
    kUsageError = 2,
    kResourceGuard = 3,
};

/// Parses argv and runs one subcommand. Data goes to `out`, diagnostics to
/// `err`. Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace fibdens::cli
