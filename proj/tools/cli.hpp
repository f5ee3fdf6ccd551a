#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace chromaspec::cli {

enum ExitCode : int { kOk = 0, kGuard = 1, kUsage = 2, kMathFailure = 3 };

/// Runs one command line (without the program name) and returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace chromaspec::cli
