#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace zastava {

enum ExitCode : int { kExitOk = 0, kExitMismatch = 1, kExitUsage = 2, kExitResource = 3 };

/// Runs one command line (without the program name) and returns its exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace zastava
