#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tcone::cli {

enum ExitCode : int {
    kSuccess = 0,
    kInvalidInput = 2,
    kInternalError = 3,
};

/// Runs one command line (without the program name); returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tcone::cli
