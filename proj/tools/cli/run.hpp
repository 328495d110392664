#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace maxtoric::cli {

enum ExitCode : int { kOk = 0, kSolverFailure = 1, kInputError = 2, kSizeLimit = 3 };

/// Entry point of the `maxtoric` tool. `args` excludes the program name.
/// Results go to `out`, diagnostics to `err`; returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace maxtoric::cli
