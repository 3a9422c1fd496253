#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace treeshare::cli {

// Exit codes of run().
inline constexpr int kTrue = 0;
inline constexpr int kFalse = 1;
inline constexpr int kBounded = 2;
inline constexpr int kUsage = 3;

// Runs one command line (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace treeshare::cli
