#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace logcoh::cli {

enum ExitCode : int { Ok = 0, Usage = 1, ValidationFailure = 2, ComputationError = 3 };

/// Runs one command line (without the program name). Output goes to `out`,
/// diagnostics and help text to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace logcoh::cli
