#pragma once

#include <iosfwd>

namespace workbench {

/// Exit codes of the command-line front end.
enum ExitCode : int { kExitOk = 0, kExitVerificationFailed = 1, kExitInputError = 2 };

/// Entry point of the `workbench` tool, split out of main() so tests can
/// drive it with in-memory streams.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace workbench
