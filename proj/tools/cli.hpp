#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace slide::cli {

/// Runs the command line (args excludes the program name) and returns the
/// process exit code. Output goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace slide::cli
