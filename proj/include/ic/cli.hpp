#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ic {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitInput = 2;
inline constexpr int kExitMismatch = 3;

/// Runs one command line (without the program name). Results go to `out`;
/// usage and diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ic
