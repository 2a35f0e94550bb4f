#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace uberhom::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitParse = 2;
inline constexpr int kExitDimension = 3;
inline constexpr int kExitResourceCap = 4;

/// Runs one command; args excludes the program name. Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace uberhom::cli
