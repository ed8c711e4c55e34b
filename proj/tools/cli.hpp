#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dipolar::cli {

enum ExitCode : int {
  kSuccess = 0,
  kUsageError = 1,
  kVerificationFailure = 2,
  kNumericalError = 3,
};

/// Runs one command line (argv[0] is the program name). Data goes to `out`,
/// diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Convenience overload for tests.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Formats v with `precision` significant digits ("%.*g").
std::string format_number(double v, int precision);

}  // namespace dipolar::cli
