#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nestfock::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kCheckFailed = 1;
inline constexpr int kUsage = 2;

// Runs the command line `args` (args[0] is the program name). Documents go
// to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nestfock::cli
