#ifndef MCR_CLI_HPP_
#define MCR_CLI_HPP_

namespace mcr::cli {

/// Exit codes, one per error family so scripts can branch on them.
inline constexpr int kExitSuccess = 0;
inline constexpr int kExitFailure = 1;         // I/O and other runtime errors
inline constexpr int kExitParseError = 2;      // bad CLI usage or malformed input file
inline constexpr int kExitBudgetExceeded = 3;  // lattice resource budget
inline constexpr int kExitUndefinedMetric = 4; // undefined correlation / degenerate fit

/// Entry point behind main(); diagnostics go to stderr, data to --out or
/// stdout. Identical arguments (seed included) produce byte-identical output.
int run(int argc, const char* const* argv);

}  // namespace mcr::cli

#endif  // MCR_CLI_HPP_
