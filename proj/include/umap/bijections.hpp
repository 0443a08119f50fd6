#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "umap/ribbon_map.hpp"
#include "umap/unicellular.hpp"

namespace umap {

/// Precubic unicellular map with three distinct non-root leaves listed in
/// tour order.
struct MarkedTriple {
  RibbonMap map;
  std::array<VertexId, 3> leaves{};

  /// The half-edges of the three leaves; stable under gluing and opening.
  std::array<HalfEdge, 3> leaf_half_edges() const;
};

struct Opening {
  MarkedTriple triple;
  Flavor flavor = Flavor::A;
};

/// Splits the intertwined node v of a canonical precubic map into three
/// leaves. The leaf carrying rotation(v)[0] keeps id v, the other two get the
/// next free ids; the opened map keeps the inherited orientation convention.
/// Throws Error(not_precubic), Error(not_canonical), Error(unknown_vertex) or
/// Error(not_intertwined).
Opening open(const RibbonMap& map, VertexId v);

/// How three leaves with half-edges h1, h2, h3 (tour order, source in its
/// canonical convention) become one vertex: counterclockwise rotation
/// (h1, h2, h3), or (h1, h3, h2) when `swap`, then the edges e_i with bit
/// i−1 of `toggles` set change twist status.
struct GluingRule {
  bool swap = false;
  std::uint8_t toggles = 0;

  friend bool operator==(const GluingRule&, const GluingRule&) = default;
};

GluingRule gluing_rule(Flavor flavor);

/// Merges the three marked leaves into one degree-3 vertex, which takes the
/// place of the first leaf in the vertex order. Any orientation convention of
/// the source is accepted; the result is canonically oriented. Throws
/// Error(invalid_triple), Error(root_leaf), Error(unknown_vertex),
/// Error(not_precubic) or Error(not_unicellular).
RibbonMap glue(const MarkedTriple& triple, Flavor flavor);
RibbonMap glue(const MarkedTriple& triple, GluingRule rule);

/// Buds are the half-edges of the twists of a canonical map, labelled
/// 1..2k along the tour: crossing number j (odd) of a twist leaves along bud
/// j and enters along bud j+1.
struct BudSystem {
  /// half_edge[i − 1] is bud i
  std::vector<HalfEdge> half_edge;
  /// sigma[i − 1] = σ(i): the next bud around the faces of the cut graph
  std::vector<int> sigma;
  /// alpha[i − 1] = the other half of the twist containing bud i
  std::vector<int> alpha;
  /// σ⁻¹(1)
  int r = 0;
};

/// Requires a canonical non-orientable precubic unicellular map.
BudSystem bud_system(const RibbonMap& map);

/// Next bud around the faces of the map cut at its twists, walking with every
/// corner on the left; indexed by half-edge, −1 for half-edges of non-twists.
std::vector<HalfEdge> bud_successor(const RibbonMap& map);

/// The map cut at its twists: rotations, the untwisted edges and the buds.
struct CutGraph {
  std::vector<int> rotation_offsets;
  std::vector<HalfEdge> rotation_data;
  std::vector<std::array<HalfEdge, 2>> edges;
  std::vector<HalfEdge> buds;

  friend bool operator==(const CutGraph&, const CutGraph&) = default;
};

CutGraph cut_graph(const RibbonMap& map);

/// Rematches the buds: the twist {b, b'} becomes {σ(b), σ(b')}. Inputs in any
/// convention are canonicalized first; the result is canonical. Throws
/// Error(orientable_input), Error(not_precubic) or Error(not_unicellular).
RibbonMap phi(const RibbonMap& map);
RibbonMap phi_inverse(const RibbonMap& map);

/// phi above the mean 2h − 1 of intertwined nodes, phi_inverse below it,
/// identity on it.
RibbonMap averaging_involution(const RibbonMap& map);

/// One side of an edge, read against the vertex of the edge's first half-edge
/// (same meaning as Flag::side).
struct EdgeSide {
  EdgeId edge = 0;
  int side = 0;

  friend auto operator<=>(const EdgeSide&, const EdgeSide&) = default;
};

struct RemyDeletion {
  RibbonMap map;
  EdgeSide marker;
};

/// Removes a non-root leaf of a projective precubic map and smooths its
/// parent. Surviving half-edges keep their relative order; the merged edge
/// lists first the far end of the parent's counterclockwise successor of the
/// leaf edge. Throws Error(wrong_type), Error(root_leaf),
/// Error(unknown_vertex), Error(not_precubic) or Error(invalid_argument).
RemyDeletion remy_delete(const RibbonMap& map, VertexId leaf);

/// Subdivides the marked edge and hangs a new leaf on the marked side. The new
/// half-edges take the ids 2e..2e+3 and the new leaf is the last vertex.
/// Throws Error(invalid_marker), Error(wrong_type) or Error(not_precubic).
RibbonMap remy_insert(const RibbonMap& map, EdgeSide marker);

}  // namespace umap
