#pragma once

// Command-line front end. Exit status: 0 success, 1 usage or validation
// error, 2 a numerical check failed.

#include <string>
#include <vector>

namespace starsdym::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitCheckFailed = 2;

/// args excludes the program name. A "--config FILE" of key = value lines
/// supplies defaults that explicit flags override.
int run(std::vector<std::string> args);

int run(int argc, char** argv);

}  // namespace starsdym::cli
