#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cfhom::cli {

/// Exit codes of run_command.
inline constexpr int exit_ok = 0;
inline constexpr int exit_failure = 1;  ///< a mathematical check failed
inline constexpr int exit_usage = 2;    ///< bad arguments or bad input data

/// Runs one command line (without the program name), e.g.
/// {"homology", "rp2.complex.json", "--format", "json"}.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cfhom::cli
