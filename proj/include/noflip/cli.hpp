#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace noflip::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kViolations = 1;
inline constexpr int kUsage = 2;
inline constexpr int kUnknown = 3;

// Runs the command line (args excludes the program name) and returns the
// exit code. Normal output goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace noflip::cli
