#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qsc::cli {

enum ExitCode : int { ok = 0, input_error = 1, capacity_error = 2 };

/// Runs one command line (without the program name). JSON lines go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qsc::cli
