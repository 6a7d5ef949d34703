#pragma once

#include <ostream>

namespace symrec::cli {

enum ExitCode { kOk = 0, kUsage = 1, kValidation = 2, kBoundBreach = 3 };

// Runs the command line; stdout-style output goes to out, diagnostics to err.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace symrec::cli
