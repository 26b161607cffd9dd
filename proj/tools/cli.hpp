#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace valzeta::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 2;
inline constexpr int kExitUncertified = 3;
inline constexpr int kExitUsage = 64;

/// Runs one command. `args` excludes the program name. Records go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace valzeta::cli
