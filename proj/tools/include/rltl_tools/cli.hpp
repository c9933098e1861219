#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace rltl::cli {

/// Exit codes: 0 success, 1 error, 2 no strongly adaptive strategy exists.
inline constexpr int kOk = 0;
inline constexpr int kError = 1;
inline constexpr int kNoStrategy = 2;

/// Runs one subcommand; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rltl::cli
