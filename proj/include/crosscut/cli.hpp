#pragma once

#include <ostream>
#include <span>
#include <string>

namespace crosscut::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitUsage = 2;

/// Runs one subcommand. `args` excludes the program name.
/// Exit codes: 0 success/isomorphic/pass, 1 non-isomorphic/fail, 2 usage or malformed input.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace crosscut::cli
