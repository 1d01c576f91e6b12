#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace gfl::cli {

/// Runs the driver on argv-style arguments (without the program name). The report goes to
/// `out`, diagnostics to `err`. Returns 0 on completed experiments, 2 on argument errors
/// and 3 when an internal invariant is violated.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gfl::cli
