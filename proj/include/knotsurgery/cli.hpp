#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace knotsurgery {

enum ExitCode : int {
    kExitOk = 0,
    kExitUsage = 1,
    kExitInternal = 2,
};

/// Runs the command-line front end. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace knotsurgery
