#pragma once

#include <ostream>

namespace ncequiv::cli {

enum ExitCode : int { kCertified = 0, kRefuted = 1, kUndecided = 2, kUsage = 3 };

// Runs one command line; reports go to out, diagnostics to err.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ncequiv::cli
