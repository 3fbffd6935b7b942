#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace p1stab::cli {

/// Dispatches one command line (without the program name).  JSON results
/// go to `out`, diagnostics to `err`.  Returns 0 on success and 2 on any
/// parse or validation error.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace p1stab::cli
