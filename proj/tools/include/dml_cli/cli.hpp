#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dml::cli {

enum ExitCode : int { kSuccess = 0, kValidationError = 1, kVerificationFailed = 2 };

/// Runs the command line given without the program name. Tables go to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

}  // namespace dml::cli
