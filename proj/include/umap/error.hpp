#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace umap {

/// Precondition failures raised by map operations. The kind names are part of
/// the CLI contract (printed verbatim on exit code 1).
enum class ErrorKind {
  invalid_map,
  parse_error,
  unknown_vertex,
  structural_mismatch,
  not_unicellular,
  canonical_convention_undefined,
  not_precubic,
  not_canonical,
  not_intertwined,
  invalid_triple,
  orientable_input,
  wrong_type,
  root_leaf,
  invalid_marker,
  tree_input,
  size_over_cap,
  invalid_argument,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_map: return "invalid map";
    case ErrorKind::parse_error: return "parse error";
    case ErrorKind::unknown_vertex: return "unknown vertex";
    case ErrorKind::structural_mismatch: return "structural mismatch";
    case ErrorKind::not_unicellular: return "not unicellular";
    case ErrorKind::canonical_convention_undefined: return "canonical convention undefined";
    case ErrorKind::not_precubic: return "not precubic";
    case ErrorKind::not_canonical: return "not canonical";
    case ErrorKind::not_intertwined: return "not intertwined";
    case ErrorKind::invalid_triple: return "invalid triple";
    case ErrorKind::orientable_input: return "orientable input";
    case ErrorKind::wrong_type: return "wrong type";
    case ErrorKind::root_leaf: return "root leaf";
    case ErrorKind::invalid_marker: return "invalid marker";
    case ErrorKind::tree_input: return "tree input";
    case ErrorKind::size_over_cap: return "size over cap";
    case ErrorKind::invalid_argument: return "invalid argument";
  }
  return "error";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(to_string(kind)) + (detail.empty() ? "" : ": " + detail)),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace umap
