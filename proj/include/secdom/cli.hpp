#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace secdom {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // bound or certification failure
inline constexpr int kExitUsage = 2;    // usage, parse or class-membership error

// Entry point of the `secdom` tool. args[0] is the program name.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace secdom
