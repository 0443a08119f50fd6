#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "umap/half_type.hpp"

namespace umap {

using HalfEdge = int;
using VertexId = int;
using EdgeId = int;

/// A half-edge together with one of its two sides.
///
/// Side bits are read against the orientation convention of the vertex that
/// carries the half-edge:
///   side 0  faces the corner *before* the half-edge (clockwise neighbour),
///   side 1  faces the corner *after* the half-edge (counterclockwise neighbour).
///
/// Flipping a vertex therefore swaps the meaning of the side bits of its
/// half-edges. Operations that flip vertices rewrite the root side bit so that
/// the root stays on the same physical edge-side.
struct Flag {
  HalfEdge half_edge = 0;
  int side = 0;

  friend constexpr auto operator<=>(const Flag&, const Flag&) = default;
};

/// Rooted map on a locally orientable surface, stored as the triple
/// (graph, rotation system, twist set) plus a root flag.
///
/// Half-edge ids are dense in [0, 2e). Edge `i` is the pair `edges()[i]`;
/// the partner of a half-edge is stored, never derived from parity. Rotations
/// are kept in a flat CSR layout.
///
/// Construction never throws on inconsistent data; call `validate` to check
/// the invariants. Every other operation assumes a valid map.
class RibbonMap {
 public:
  RibbonMap() = default;
  RibbonMap(std::vector<std::array<HalfEdge, 2>> edges,
            const std::vector<std::vector<HalfEdge>>& rotations,
            const std::vector<EdgeId>& twist_edges, Flag root);
  RibbonMap(std::vector<std::array<HalfEdge, 2>> edges, std::vector<int> rotation_offsets,
            std::vector<HalfEdge> rotation_data, std::vector<std::uint8_t> twist_bits, Flag root);

  int num_edges() const { return static_cast<int>(edges_.size()); }
  int num_half_edges() const { return 2 * num_edges(); }
  int num_vertices() const { return static_cast<int>(offsets_.size()) - 1; }

  std::span<const HalfEdge> rotation(VertexId v) const {
    return {rotation_data_.data() + offsets_[v], static_cast<std::size_t>(offsets_[v + 1] - offsets_[v])};
  }
  int degree(VertexId v) const { return offsets_[v + 1] - offsets_[v]; }

  const std::array<HalfEdge, 2>& edge(EdgeId e) const { return edges_[e]; }
  const std::vector<std::array<HalfEdge, 2>>& edges() const { return edges_; }
  bool is_twist(EdgeId e) const { return twist_bits_[e] != 0; }
  bool is_loop(EdgeId e) const { return vertex_of(edges_[e][0]) == vertex_of(edges_[e][1]); }
  const std::vector<std::uint8_t>& twist_bits() const { return twist_bits_; }
  std::vector<EdgeId> twists() const;

  HalfEdge partner(HalfEdge h) const { return partner_[h]; }
  EdgeId edge_of(HalfEdge h) const { return edge_of_[h]; }
  VertexId vertex_of(HalfEdge h) const { return vertex_of_[h]; }
  /// Counterclockwise successor / predecessor of `h` around its vertex.
  HalfEdge next(HalfEdge h) const;
  HalfEdge prev(HalfEdge h) const;

  Flag root() const { return root_; }
  VertexId root_vertex() const { return vertex_of(root_.half_edge); }

  const std::vector<int>& rotation_offsets() const { return offsets_; }
  const std::vector<HalfEdge>& rotation_data() const { return rotation_data_; }

  friend bool operator==(const RibbonMap& a, const RibbonMap& b) {
    return a.edges_ == b.edges_ && a.offsets_ == b.offsets_ && a.rotation_data_ == b.rotation_data_ &&
           a.twist_bits_ == b.twist_bits_ && a.root_ == b.root_;
  }

 private:
  void build_index();

  std::vector<std::array<HalfEdge, 2>> edges_;
  std::vector<int> offsets_{0};
  std::vector<HalfEdge> rotation_data_;
  std::vector<std::uint8_t> twist_bits_;
  Flag root_;

  // derived
  std::vector<HalfEdge> partner_;
  std::vector<EdgeId> edge_of_;
  std::vector<VertexId> vertex_of_;
  std::vector<int> position_;
};

struct Violation {
  enum class Kind {
    pairing_not_involution,
    rotation_not_partition,
    twist_out_of_range,
    bad_root,
    not_connected,
  };
  Kind kind;
  std::string message;
  /// Edge id, vertex id or -1, depending on the kind.
  int index = -1;
};

/// Returns the first violated invariant, or nothing when the map is valid.
std::optional<Violation> validate(const RibbonMap& map);

/// Throws Error(invalid_map) when `validate` reports a violation.
void require_valid(const RibbonMap& map);

/// Face walking.
///
/// A walker leaving a vertex along half-edge h on side s occupies the
/// *departure* flag (h, s). Crossing the edge lands on the arrival flag
/// (h', s') with h' = partner(h) and
///     s' = 1 - s   for an ordinary edge,
///     s' = s       for a twist (the crosswalk).
/// At the far vertex the walker passes one corner and departs again:
///     s' = 1: corner (h', next(h')), a *left* corner; depart (next(h'), 0)
///     s' = 0: corner (prev(h'), h'), a *right* corner; depart (prev(h'), 1)
/// Hence the corner passed just before departure flag (h, s) is the corner
/// after prev(h) when s = 0 (left) and the corner after h when s = 1 (right).
Flag arrival_flag(const RibbonMap& map, Flag departure);
Flag next_departure(const RibbonMap& map, Flag departure);

/// Each border lists, per edge-side crossing, the departure flag followed by
/// the arrival flag. Over all borders every flag (half-edge, side) occurs
/// exactly once, so the total step count is 4e and a border with k crossings
/// passes k corners (2e corners in total).
struct FaceTrace {
  std::vector<std::vector<Flag>> borders;

  int num_faces() const { return static_cast<int>(borders.size()); }
};

FaceTrace trace_faces(const RibbonMap& map);
int count_faces(const RibbonMap& map);

HalfType euler_type(const RibbonMap& map);

/// Per-vertex flip bits that empty the twist set, if any exist.
std::optional<std::vector<bool>> orienting_flips(const RibbonMap& map);
bool is_orientable(const RibbonMap& map);

/// Reverses the rotation at `v` and toggles every non-loop edge at `v`.
/// Throws Error(unknown_vertex).
RibbonMap flip_vertex(const RibbonMap& map, VertexId v);
RibbonMap flip_vertices(const RibbonMap& map, const std::vector<bool>& flips);

/// Flip bits (indexed by the vertices of `a`) turning `a` into `b`, if any.
/// Vertices are matched by half-edge content, not by id. Throws
/// Error(structural_mismatch) when pairing or root half-edge differ.
std::optional<std::vector<bool>> flip_vector(const RibbonMap& a, const RibbonMap& b);
bool flip_equivalent(const RibbonMap& a, const RibbonMap& b);

}  // namespace umap
