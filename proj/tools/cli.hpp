#pragma once

#include <iosfwd>

namespace ivspec::cli {

/// Exit codes of the ivspec tool.
inline constexpr int kOk = 0;
inline constexpr int kInputError = 1;
inline constexpr int kViolation = 2;

/// Runs the command line `argv[0..argc)`, writing results to `out` and
/// diagnostics to `err`. Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace ivspec::cli
