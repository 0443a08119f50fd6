#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "umap/ribbon_map.hpp"

namespace umap {

enum class Side : std::uint8_t { left, right };

/// A corner is the angular sector after `first` and before `second` in the
/// counterclockwise rotation of `vertex`. A leaf has one corner with
/// first == second.
struct Corner {
  VertexId vertex;
  HalfEdge first;
  HalfEdge second;
  Side side;
  /// Position in the tour, 1-based; the root corner has label 1.
  int label;
  /// Half-edge the walker arrived along and the one it leaves along.
  HalfEdge arrival;
  HalfEdge departure;
};

/// Corner sequence of a unicellular map starting at the root corner.
struct Tour {
  std::vector<Corner> corners;
  /// departures[i] is the flag the walker leaves along right after corners[i].
  std::vector<Flag> departures;
  /// label_after[h] = label of the corner that follows h counterclockwise.
  std::vector<int> label_after;

  const Corner& corner_after(HalfEdge h) const { return corners[label_after[h] - 1]; }
};

/// Throws Error(not_unicellular) if the root face does not visit every corner.
Tour tour(const RibbonMap& map);

bool is_unicellular(const RibbonMap& map);

/// All vertices of degree 1 or 3 and the root vertex a leaf.
bool is_precubic(const RibbonMap& map);

/// Flip-equivalent map in which each vertex has strictly more left than
/// right corners. Requires a unicellular map with odd degrees only; throws
/// Error(canonical_convention_undefined) otherwise.
RibbonMap canonical_orientation(const RibbonMap& map);
bool is_canonical(const RibbonMap& map);

enum class EdgeWay : std::uint8_t { two_way, one_way };
enum class TwistDirection : std::uint8_t { none, left_to_right, right_to_left };
enum class Flavor : std::uint8_t { A, B, C, D };

char flavor_letter(Flavor f);
std::optional<Flavor> parse_flavor(char c);

struct NodeReport {
  bool intertwined = false;
  Flavor flavor = Flavor::A;
  /// Corners c1, c2, c3 in counterclockwise order, c1 first in the tour;
  /// stored as the half-edge each corner follows.
  std::array<HalfEdge, 3> corners{};
};

struct Classification {
  std::vector<EdgeWay> edge_ways;
  std::vector<TwistDirection> twist_directions;
  /// Indexed by vertex; only degree-3 vertices carry meaningful data.
  std::vector<std::optional<NodeReport>> nodes;
  int tau = 0;
  int t_lr = 0;
  int t_rl = 0;
  int dsc = 0;
  int asc = 0;
  std::array<int, 4> flavor_counts{};
};

/// Requires a canonically oriented precubic unicellular map; throws
/// Error(not_precubic) or Error(not_canonical).
Classification classify(const RibbonMap& map);

/// τ = 2h + T_RL − T_LR for a canonical precubic unicellular map.
bool trisection_identity(const RibbonMap& map);

struct CoreScheme {
  RibbonMap core;
  RibbonMap scheme;
  bool dominant = false;
};

/// Throws Error(tree_input) when leaf pruning empties the map and
/// Error(not_unicellular) for maps with several faces.
CoreScheme core_scheme(const RibbonMap& map);

/// Relabelled copy of a unicellular map that depends only on the rooted map
/// it represents. Each vertex is flipped so that its first visited corner is
/// left, then half-edges, edges and vertices are numbered by first
/// appearance along the tour.
struct NormalForm {
  RibbonMap map;
  /// new id of every old half-edge
  std::vector<HalfEdge> half_edge_map;
  /// per old half-edge: whether its vertex was flipped before relabelling
  std::vector<bool> flips;
  /// Carries a flag of the input map to the same physical flag of `map`.
  Flag transport(Flag f) const;
};

NormalForm normal_form(const RibbonMap& map);

/// String identifying a rooted unicellular map up to isomorphism.
std::string rooted_key(const RibbonMap& map);

}  // namespace umap
