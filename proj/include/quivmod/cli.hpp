#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace quivmod {

/// Runs one CLI invocation. `args` excludes the program name. Returns the exit code:
/// 0 success, 1 bad input, 2 violated precondition, 3 internal consistency failure.
int run_command(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace quivmod
