#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace plethora::cli {

/// Runs one command line (without the program name). Returns the process exit code:
/// 0 on success, 1 when a verification suite fails, 2 on bad input or a tripped guard.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace plethora::cli
