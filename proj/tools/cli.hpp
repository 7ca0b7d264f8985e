#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace isophase::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitBudget = 3;

/// Parses argv (argv[0] is the program name) and runs one subcommand.
int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Convenience overload for tests: args excludes the program name.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace isophase::cli
