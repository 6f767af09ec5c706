#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace weylstrata::cli {

// Runs one command line (without the program name). Returns the exit code:
// 0 success, 1 computational failure or failed check, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace weylstrata::cli
