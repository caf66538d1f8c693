#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pwp::cli {

// Exit statuses.
inline constexpr int kOk = 0;
inline constexpr int kReproductionFailed = 1;
inline constexpr int kUsageError = 2;
inline constexpr int kNumericalError = 3;

/// Runs the `pwp` tool with `args` (without the program name), writing
/// results to `out` and diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pwp::cli
