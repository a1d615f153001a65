#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hypgreen::cli {

enum ExitCode { ok = 0, verification_failed = 1, usage_error = 2 };

// Runs the command line (without the program name). Tables go to `out` unless --out is
// given; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Shortest text with 17 significant digits, '.' as decimal point regardless of locale.
std::string format_double(double v);

}  // namespace hypgreen::cli
