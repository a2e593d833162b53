#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace srw {

/// Runs the command line given argv-style arguments (program name excluded).
/// Returns the process exit code: 0 success, 1 domain error, 2 usage error,
/// 3 enumeration budget exceeded.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace srw
