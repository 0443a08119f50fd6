#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace umap {

/// Exit codes of the `umap` tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Runs the tool on `args` (without the program name).
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace umap
