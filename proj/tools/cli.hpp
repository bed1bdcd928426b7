#pragma once

#include <ostream>

namespace tatek {

/// Exit status of the command-line front end.
enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kUsageError = 2 };

/// Runs one command line (argv[0] is the program name). Results go to `out`,
/// diagnostics to `err`.
int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

} // namespace tatek
