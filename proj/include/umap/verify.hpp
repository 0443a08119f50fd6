#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace umap {

struct CheckResult {
  std::string suite;
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyOptions {
  /// Largest edge count enumerated by the suites.
  int max_edges = 7;
  /// Restricts the phi suite to one class of maps.
  std::optional<int> twice_h;
  std::optional<int> m;
  int jobs = 1;
  int edge_cap = 7;
};

/// "formulas", "trisection", "phi", "openglue", "remy".
const std::vector<std::string>& suite_names();

/// Runs one suite, or every suite for "all". Throws Error(invalid_argument)
/// for unknown names and Error(size_over_cap) when max_edges exceeds the cap.
std::vector<CheckResult> run_suite(std::string_view suite, const VerifyOptions& options);

}  // namespace umap
