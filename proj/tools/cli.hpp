#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace quasiper::cli {

// Exit codes, stable for scripts.
inline constexpr int kOk = 0;
inline constexpr int kUsage = 1;
inline constexpr int kBudget = 2;
inline constexpr int kCrossCheck = 3;

/// Runs one command line (args excludes the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace quasiper::cli
