#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sforge {

/// Runs the command line given by args (without the program name). Returns
/// 0 on success, 1 for negative answers under --strict, 2 for usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sforge
