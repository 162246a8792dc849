#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qexcess::cli {

enum ExitCode : int { kSuccess = 0, kRefuted = 1, kInputError = 2 };

/// Runs one command. `args` excludes the program name. The JSON report goes
/// to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qexcess::cli
