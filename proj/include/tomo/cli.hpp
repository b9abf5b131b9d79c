#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tomo::cli {

/// Runs the command line given as `args` (without the program name).
/// Exit codes: 0 success, 1 verification failure, 2 input error,
/// 3 numeric/internal error.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace tomo::cli
