#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "umap/ribbon_map.hpp"

namespace umap {

/// Text form, one map per document:
///
///     UMAP v1
///     edges: <e>
///     pair: <h0> <h1>        one line per edge, edge id = line order
///     vertex: <h h h ...>    one line per vertex, counterclockwise
///     twists: <edge ids>     possibly empty
///     root: <half-edge id> <side bit>
///
/// Lines starting with '#' and blank lines are ignored by the parser.
std::string serialize(const RibbonMap& map);

/// Parses exactly one document. Syntax errors and invariant violations raise
/// Error(parse_error) whose message starts with "line <n>:".
RibbonMap parse_map(std::string_view text);

/// Splits a stream on "UMAP v1" headers and parses every document.
std::vector<RibbonMap> read_maps(std::istream& in);

}  // namespace umap
