#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tropical::cli {

enum ExitCode : int {
    kContained = 0,
    kUsageError = 1,
    kInputError = 2,
    kNotContained = 3,
};

/// Runs the command line tool with argv-style arguments (args[0] is the
/// program name). Never throws; every outcome is an exit code.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace tropical::cli
