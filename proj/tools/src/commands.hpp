#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace eqlines::cli {

// Exit codes
inline constexpr int kOk = 0;
inline constexpr int kNegative = 1;  // ran, verification came back negative
inline constexpr int kUsage = 2;     // bad arguments, parse or domain errors
inline constexpr int kIo = 3;

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace eqlines::cli
