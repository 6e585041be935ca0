#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace charvar {

// Parses and executes one command line (without the program name).
// Returns the exit status: 0 success, 1 usage error, 2 failed mathematical
// invariant. All regular output goes to out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace charvar
