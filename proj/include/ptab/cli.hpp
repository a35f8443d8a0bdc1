#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ptab {

/// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;  // a theorem check failed
inline constexpr int kExitUsage = 2;        // bad arguments or malformed input

/// Runs the tool on `args` (without the program name). `in` backs the "-"
/// file name.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace ptab
