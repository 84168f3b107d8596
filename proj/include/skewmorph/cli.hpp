#pragma once

#include <ostream>

namespace skewmorph {

/// Exit codes of the command-line front end.
enum ExitCode : int { kExitPass = 0, kExitFailure = 1, kExitUsage = 2, kExitGuard = 3 };

/// Runs the `skewmorph` command line with argv[0] as the program name.
/// Records and reports go to `out` (or the --out file), diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace skewmorph
