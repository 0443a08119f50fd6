#include "umap/ribbon_map.hpp"

#include <algorithm>
#include <queue>

#include "umap/error.hpp"

namespace umap {

RibbonMap::RibbonMap(std::vector<std::array<HalfEdge, 2>> edges,
                     const std::vector<std::vector<HalfEdge>>& rotations,
                     const std::vector<EdgeId>& twist_edges, Flag root)
    : edges_(std::move(edges)), root_(root) {
  offsets_.assign(1, 0);
  for (const auto& rot : rotations) {
    rotation_data_.insert(rotation_data_.end(), rot.begin(), rot.end());
    offsets_.push_back(static_cast<int>(rotation_data_.size()));
  }
  twist_bits_.assign(edges_.size(), 0);
  for (EdgeId e : twist_edges) {
    if (e >= 0 && e < num_edges()) {
      twist_bits_[e] ^= 1;
    } else {
      // Remembered as a sentinel so validate() can report it.
      twist_bits_.push_back(2);
    }
  }
  build_index();
}

RibbonMap::RibbonMap(std::vector<std::array<HalfEdge, 2>> edges, std::vector<int> rotation_offsets,
                     std::vector<HalfEdge> rotation_data, std::vector<std::uint8_t> twist_bits, Flag root)
    : edges_(std::move(edges)),
      offsets_(std::move(rotation_offsets)),
      rotation_data_(std::move(rotation_data)),
      twist_bits_(std::move(twist_bits)),
      root_(root) {
  build_index();
}

void RibbonMap::build_index() {
  const int nh = num_half_edges();
  partner_.assign(nh, -1);
  edge_of_.assign(nh, -1);
  vertex_of_.assign(nh, -1);
  position_.assign(nh, -1);
  for (EdgeId e = 0; e < num_edges(); ++e) {
    auto [a, b] = edges_[e];
    if (a >= 0 && a < nh && b >= 0 && b < nh) {
      partner_[a] = b;
      partner_[b] = a;
      edge_of_[a] = e;
      edge_of_[b] = e;
    }
  }
  for (VertexId v = 0; v + 1 < static_cast<int>(offsets_.size()); ++v) {
    for (int i = offsets_[v]; i < offsets_[v + 1]; ++i) {
      HalfEdge h = rotation_data_[i];
      if (h >= 0 && h < nh) {
        vertex_of_[h] = v;
        position_[h] = i - offsets_[v];
      }
    }
  }
}

std::vector<EdgeId> RibbonMap::twists() const {
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < num_edges(); ++e) {
    if (twist_bits_[e]) out.push_back(e);
  }
  return out;
}

HalfEdge RibbonMap::next(HalfEdge h) const {
  VertexId v = vertex_of_[h];
  int deg = offsets_[v + 1] - offsets_[v];
  int p = position_[h] + 1;
  return rotation_data_[offsets_[v] + (p == deg ? 0 : p)];
}

HalfEdge RibbonMap::prev(HalfEdge h) const {
  VertexId v = vertex_of_[h];
  int deg = offsets_[v + 1] - offsets_[v];
  int p = position_[h] == 0 ? deg - 1 : position_[h] - 1;
  return rotation_data_[offsets_[v] + p];
}

std::optional<Violation> validate(const RibbonMap& map) {
  using K = Violation::Kind;
  const int nh = map.num_half_edges();
  std::vector<int> seen(nh, 0);
  for (EdgeId e = 0; e < map.num_edges(); ++e) {
    for (HalfEdge h : map.edge(e)) {
      if (h < 0 || h >= nh || seen[h]++) {
        return Violation{K::pairing_not_involution,
                         "pairing not an involution (edge " + std::to_string(e) + ")", e};
      }
    }
  }
  std::fill(seen.begin(), seen.end(), 0);
  if (map.num_vertices() <= 0) return Violation{K::rotation_not_partition, "map has no vertices", -1};
  for (VertexId v = 0; v < map.num_vertices(); ++v) {
    if (map.degree(v) == 0) {
      return Violation{K::rotation_not_partition, "empty rotation at vertex " + std::to_string(v), v};
    }
    for (HalfEdge h : map.rotation(v)) {
      if (h < 0 || h >= nh || seen[h]++) {
        return Violation{K::rotation_not_partition,
                         "rotations do not partition the half-edges (vertex " + std::to_string(v) + ")", v};
      }
    }
  }
  if (auto missing = std::find(seen.begin(), seen.end(), 0); missing != seen.end()) {
    int h = static_cast<int>(missing - seen.begin());
    return Violation{K::rotation_not_partition, "half-edge " + std::to_string(h) + " belongs to no vertex", -1};
  }
  if (static_cast<int>(map.twist_bits().size()) != map.num_edges()) {
    return Violation{K::twist_out_of_range, "twist edge id out of range", -1};
  }
  Flag root = map.root();
  if (root.half_edge < 0 || root.half_edge >= nh || (root.side != 0 && root.side != 1)) {
    return Violation{K::bad_root, "root must be an existing half-edge with side 0 or 1", -1};
  }
  // connectivity
  const int nv = map.num_vertices();
  std::vector<char> reached(nv, 0);
  std::queue<VertexId> queue;
  reached[0] = 1;
  queue.push(0);
  int count = 1;
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop();
    for (HalfEdge h : map.rotation(v)) {
      VertexId w = map.vertex_of(map.partner(h));
      if (!reached[w]) {
        reached[w] = 1;
        ++count;
        queue.push(w);
      }
    }
  }
  if (count != nv) {
    int first = static_cast<int>(std::find(reached.begin(), reached.end(), 0) - reached.begin());
    return Violation{K::not_connected, "graph not connected", first};
  }
  return std::nullopt;
}

void require_valid(const RibbonMap& map) {
  if (auto violation = validate(map)) throw Error(ErrorKind::invalid_map, violation->message);
}

Flag arrival_flag(const RibbonMap& map, Flag departure) {
  HalfEdge h = departure.half_edge;
  int s = map.is_twist(map.edge_of(h)) ? departure.side : 1 - departure.side;
  return {map.partner(h), s};
}

Flag next_departure(const RibbonMap& map, Flag departure) {
  Flag arr = arrival_flag(map, departure);
  if (arr.side == 1) return {map.next(arr.half_edge), 0};
  return {map.prev(arr.half_edge), 1};
}

namespace {
int flag_index(Flag f) { return 2 * f.half_edge + f.side; }
}  // namespace

FaceTrace trace_faces(const RibbonMap& map) {
  FaceTrace trace;
  const int nf = 2 * map.num_half_edges();
  std::vector<char> used(nf, 0);
  for (int start = 0; start < nf; ++start) {
    if (used[start]) continue;
    Flag dep{start / 2, start % 2};
    std::vector<Flag> border;
    do {
      Flag arr = arrival_flag(map, dep);
      used[flag_index(dep)] = 1;
      used[flag_index(arr)] = 1;
      border.push_back(dep);
      border.push_back(arr);
      dep = next_departure(map, dep);
    } while (flag_index(dep) != start);
    trace.borders.push_back(std::move(border));
  }
  return trace;
}

int count_faces(const RibbonMap& map) {
  const int nf = 2 * map.num_half_edges();
  std::vector<char> used(nf, 0);
  int orbits = 0;
  for (int start = 0; start < nf; ++start) {
    if (used[start]) continue;
    ++orbits;
    Flag dep{start / 2, start % 2};
    do {
      used[flag_index(dep)] = 1;
      dep = next_departure(map, dep);
    } while (flag_index(dep) != start);
  }
  // each face is walked once in each direction
  return orbits / 2;
}

HalfType euler_type(const RibbonMap& map) {
  int f = count_faces(map);
  return {2 + map.num_edges() - map.num_vertices() - f, is_orientable(map)};
}

std::optional<std::vector<bool>> orienting_flips(const RibbonMap& map) {
  const int nv = map.num_vertices();
  std::vector<int> flip(nv, -1);
  for (VertexId start = 0; start < nv; ++start) {
    if (flip[start] != -1) continue;
    flip[start] = 0;
    std::queue<VertexId> queue;
    queue.push(start);
    while (!queue.empty()) {
      VertexId v = queue.front();
      queue.pop();
      for (HalfEdge h : map.rotation(v)) {
        EdgeId e = map.edge_of(h);
        VertexId w = map.vertex_of(map.partner(h));
        if (w == v) {
          if (map.is_twist(e)) return std::nullopt;
          continue;
        }
        int want = flip[v] ^ (map.is_twist(e) ? 1 : 0);
        if (flip[w] == -1) {
          flip[w] = want;
          queue.push(w);
        } else if (flip[w] != want) {
          return std::nullopt;
        }
      }
    }
  }
  return std::vector<bool>(flip.begin(), flip.end());
}

bool is_orientable(const RibbonMap& map) { return orienting_flips(map).has_value(); }

RibbonMap flip_vertices(const RibbonMap& map, const std::vector<bool>& flips) {
  std::vector<HalfEdge> data = map.rotation_data();
  const auto& offsets = map.rotation_offsets();
  for (VertexId v = 0; v < map.num_vertices(); ++v) {
    if (flips[v]) std::reverse(data.begin() + offsets[v], data.begin() + offsets[v + 1]);
  }
  std::vector<std::uint8_t> twists = map.twist_bits();
  for (EdgeId e = 0; e < map.num_edges(); ++e) {
    auto [a, b] = map.edge(e);
    if (flips[map.vertex_of(a)] != flips[map.vertex_of(b)]) twists[e] ^= 1;
  }
  Flag root = map.root();
  if (flips[map.vertex_of(root.half_edge)]) root.side ^= 1;
  return RibbonMap(map.edges(), offsets, std::move(data), std::move(twists), root);
}

RibbonMap flip_vertex(const RibbonMap& map, VertexId v) {
  if (v < 0 || v >= map.num_vertices()) throw Error(ErrorKind::unknown_vertex, std::to_string(v));
  std::vector<bool> flips(map.num_vertices(), false);
  flips[v] = true;
  return flip_vertices(map, flips);
}

namespace {

bool cyclic_equal(std::span<const HalfEdge> a, std::span<const HalfEdge> b, bool reversed) {
  const std::size_t d = a.size();
  auto start = std::find(b.begin(), b.end(), a[0]);
  if (start == b.end()) return false;
  std::size_t off = static_cast<std::size_t>(start - b.begin());
  for (std::size_t i = 0; i < d; ++i) {
    std::size_t j = reversed ? (off + d - i) % d : (off + i) % d;
    if (a[i] != b[j]) return false;
  }
  return true;
}

}  // namespace

std::optional<std::vector<bool>> flip_vector(const RibbonMap& a, const RibbonMap& b) {
  if (a.num_half_edges() != b.num_half_edges() || a.root().half_edge != b.root().half_edge) {
    throw Error(ErrorKind::structural_mismatch, "half-edge sets or root half-edges differ");
  }
  for (HalfEdge h = 0; h < a.num_half_edges(); ++h) {
    if (a.partner(h) != b.partner(h)) throw Error(ErrorKind::structural_mismatch, "pairings differ");
  }
  if (a.num_vertices() != b.num_vertices()) return std::nullopt;

  const int nv = a.num_vertices();
  // -1 free, 0 or 1 forced
  std::vector<int> forced(nv, -1);
  for (VertexId v = 0; v < nv; ++v) {
    auto ra = a.rotation(v);
    VertexId w = b.vertex_of(ra[0]);
    auto rb = b.rotation(w);
    if (ra.size() != rb.size()) return std::nullopt;
    for (HalfEdge h : ra) {
      if (b.vertex_of(h) != w) return std::nullopt;
    }
    bool same = cyclic_equal(ra, rb, false);
    bool reversed = cyclic_equal(ra, rb, true);
    if (!same && !reversed) return std::nullopt;
    if (same != reversed) forced[v] = same ? 0 : 1;
  }
  {
    VertexId rv = a.root_vertex();
    int want = a.root().side ^ b.root().side;
    if (forced[rv] != -1 && forced[rv] != want) return std::nullopt;
    forced[rv] = want;
  }

  // relative parities along non-loop edges
  std::vector<int> parity(nv, -1);
  std::vector<int> component(nv, -1);
  std::vector<int> offset;  // per component: flip = parity ^ offset
  for (VertexId start = 0; start < nv; ++start) {
    if (parity[start] != -1) continue;
    int comp = static_cast<int>(offset.size());
    offset.push_back(-1);
    parity[start] = 0;
    component[start] = comp;
    std::queue<VertexId> queue;
    queue.push(start);
    while (!queue.empty()) {
      VertexId v = queue.front();
      queue.pop();
      for (HalfEdge h : a.rotation(v)) {
        HalfEdge p = a.partner(h);
        VertexId w = a.vertex_of(p);
        int diff = a.is_twist(a.edge_of(h)) != b.is_twist(b.edge_of(h)) ? 1 : 0;
        if (w == v) {
          if (diff) return std::nullopt;
          continue;
        }
        int want = parity[v] ^ diff;
        if (parity[w] == -1) {
          parity[w] = want;
          component[w] = comp;
          queue.push(w);
        } else if (parity[w] != want) {
          return std::nullopt;
        }
      }
    }
  }
  for (VertexId v = 0; v < nv; ++v) {
    if (forced[v] == -1) continue;
    int need = forced[v] ^ parity[v];
    int& off = offset[component[v]];
    if (off == -1) {
      off = need;
    } else if (off != need) {
      return std::nullopt;
    }
  }
  std::vector<bool> flips(nv);
  for (VertexId v = 0; v < nv; ++v) {
    int off = offset[component[v]];
    flips[v] = (parity[v] ^ (off == -1 ? 0 : off)) != 0;
  }
  return flips;
}

bool flip_equivalent(const RibbonMap& a, const RibbonMap& b) { return flip_vector(a, b).has_value(); }

}  // namespace umap
