#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace magnitude::cli {

enum ExitCode : int { ok = 0, domain_error = 1, undecided = 2, usage = 3 };

/// Runs one command line (without the program name) and returns the exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace magnitude::cli
