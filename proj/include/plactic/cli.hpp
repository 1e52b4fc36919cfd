#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace plactic {

/// Runs one CLI invocation; args excludes the program name. Returns the exit
/// code: 0 success, 1 a verification suite failed, 2 invalid input.
int run_cli(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

}  // namespace plactic
