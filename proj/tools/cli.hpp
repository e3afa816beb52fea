#pragma once

#include <ostream>

namespace begdob::cli {

enum ExitCode : int {
    kExitOk = 0,
    kExitCheckFailed = 1,
    kExitUsage = 2,
};

/// Runs the command line `argv[0] <subcommand> ...`, writing results to `out`
/// and diagnostics to `err`. Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace begdob::cli
