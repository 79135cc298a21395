#pragma once

#include <iosfwd>
#include <string_view>
#include <utility>

namespace hso::cli {

inline constexpr int kExitClean = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitCounterexample = 3;

/// "A..B" or "A". Throws Usage.
std::pair<int, int> parse_order_range(std::string_view text);

/// Full command line (argv[0] included). Never throws; every failure maps to
/// an exit code with a message on `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hso::cli
