#pragma once

#include <iosfwd>

namespace alphafactor::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCounterexample = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInput = 3;

/**
 * Entry point of the `alphafactor` tool. Subcommands: radius, spectrum,
 * quotient, charpoly, evenfactor, yankano, extremal, classify, verify,
 * scan-subcases, case3. Returns 0 on success, 1 when a counterexample or
 * property violation is found, 2 on usage errors and 3 on input errors.
 */
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace alphafactor::cli
