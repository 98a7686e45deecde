#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace chowkit::cli {

enum ExitCode : int { kSuccess = 0, kVerificationFailure = 1, kInputError = 2 };

// args excludes the program name. Writes results to out and diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace chowkit::cli
