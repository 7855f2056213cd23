#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wbayes {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitData = 2;

/// Entry point of the `wbayes` tool; args exclude the program name.
/// Subcommands: simulate, smooth, fpca, select-reference.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wbayes
