#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bp {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitDomain = 3;

/// Entry point of the bp tool; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bp
