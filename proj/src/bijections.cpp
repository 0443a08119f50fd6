#include "umap/bijections.hpp"

#include <algorithm>
#include <stdexcept>

#include "umap/error.hpp"

namespace umap {

std::array<HalfEdge, 3> MarkedTriple::leaf_half_edges() const {
  std::array<HalfEdge, 3> out{};
  for (int i = 0; i < 3; ++i) out[i] = map.rotation(leaves[i])[0];
  return out;
}

namespace {

void require_vertex(const RibbonMap& map, VertexId v) {
  if (v < 0 || v >= map.num_vertices()) throw Error(ErrorKind::unknown_vertex, std::to_string(v));
}

void require_precubic(const RibbonMap& map) {
  if (!is_precubic(map)) throw Error(ErrorKind::not_precubic, "");
}

std::vector<std::vector<HalfEdge>> rotations_of(const RibbonMap& map) {
  std::vector<std::vector<HalfEdge>> out(map.num_vertices());
  for (VertexId v = 0; v < map.num_vertices(); ++v) {
    auto rot = map.rotation(v);
    out[v].assign(rot.begin(), rot.end());
  }
  return out;
}

std::vector<EdgeId> twists_from_bits(const std::vector<std::uint8_t>& bits) {
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < static_cast<EdgeId>(bits.size()); ++e) {
    if (bits[e]) out.push_back(e);
  }
  return out;
}

}  // namespace

Opening open(const RibbonMap& map, VertexId v) {
  require_vertex(map, v);
  Classification cl = classify(map);
  const auto& node = cl.nodes[v];
  if (!node || !node->intertwined) throw Error(ErrorKind::not_intertwined, "vertex " + std::to_string(v));

  auto rotations = rotations_of(map);
  const auto rot = rotations[v];
  rotations[v] = {rot[0]};
  rotations.push_back({rot[1]});
  rotations.push_back({rot[2]});
  RibbonMap opened(map.edges(), rotations, map.twists(), map.root());

  Tour t = tour(opened);
  std::array<VertexId, 3> leaves{v, map.num_vertices(), map.num_vertices() + 1};
  std::sort(leaves.begin(), leaves.end(), [&](VertexId a, VertexId b) {
    return t.label_after[opened.rotation(a)[0]] < t.label_after[opened.rotation(b)[0]];
  });
  return Opening{MarkedTriple{std::move(opened), leaves}, node->flavor};
}

GluingRule gluing_rule(Flavor flavor) {
  // Each rule equals (!swap, toggles ^ 0b111), a flip of the new vertex.
  switch (flavor) {
    case Flavor::A: return {false, 0b000};
    case Flavor::B: return {true, 0b011};
    case Flavor::C: return {true, 0b110};
    case Flavor::D: return {true, 0b101};
  }
  return {};
}

RibbonMap glue(const MarkedTriple& triple, Flavor flavor) { return glue(triple, gluing_rule(flavor)); }

RibbonMap glue(const MarkedTriple& triple, GluingRule rule) {
  const RibbonMap& source = triple.map;
  for (VertexId v : triple.leaves) require_vertex(source, v);
  require_precubic(source);
  const auto [v1, v2, v3] = triple.leaves;
  if (v1 == v2 || v2 == v3 || v1 == v3) throw Error(ErrorKind::invalid_triple, "leaves must be distinct");
  for (VertexId v : triple.leaves) {
    if (source.degree(v) != 1) throw Error(ErrorKind::invalid_triple, "vertex " + std::to_string(v) + " is not a leaf");
    if (v == source.root_vertex()) throw Error(ErrorKind::root_leaf, "vertex " + std::to_string(v));
  }
  RibbonMap canonical = canonical_orientation(source);
  Tour t = tour(canonical);
  const auto h = triple.leaf_half_edges();
  if (!(t.label_after[h[0]] < t.label_after[h[1]] && t.label_after[h[1]] < t.label_after[h[2]])) {
    throw Error(ErrorKind::invalid_triple, "leaves not in tour order");
  }

  std::vector<std::vector<HalfEdge>> rotations;
  for (VertexId v = 0; v < canonical.num_vertices(); ++v) {
    if (v == v2 || v == v3) continue;
    if (v == v1) {
      rotations.push_back(rule.swap ? std::vector<HalfEdge>{h[0], h[2], h[1]} : std::vector<HalfEdge>{h[0], h[1], h[2]});
    } else {
      auto rot = canonical.rotation(v);
      rotations.emplace_back(rot.begin(), rot.end());
    }
  }
  auto bits = canonical.twist_bits();
  for (int i = 0; i < 3; ++i) {
    if ((rule.toggles >> i) & 1) bits[canonical.edge_of(h[i])] ^= 1;
  }
  RibbonMap glued(canonical.edges(), rotations, twists_from_bits(bits), canonical.root());
  return canonical_orientation(glued);
}

std::vector<HalfEdge> bud_successor(const RibbonMap& map) {
  const int nh = map.num_half_edges();
  std::vector<HalfEdge> succ(nh, -1);
  for (HalfEdge b = 0; b < nh; ++b) {
    if (!map.is_twist(map.edge_of(b))) continue;
    HalfEdge h = map.next(b);
    for (int steps = 0; !map.is_twist(map.edge_of(h)); ++steps) {
      if (steps > nh) throw std::logic_error("bud walk does not return to a bud");
      h = map.next(map.partner(h));
    }
    succ[b] = h;
  }
  return succ;
}

BudSystem bud_system(const RibbonMap& map) {
  require_precubic(map);
  if (!is_canonical(map)) throw Error(ErrorKind::not_canonical, "");
  if (map.twists().empty()) throw Error(ErrorKind::orientable_input, "");
  Tour t = tour(map);
  std::vector<int> label(map.num_half_edges(), 0);
  int crossing = 0;
  for (const Flag& d : t.departures) {
    if (!map.is_twist(map.edge_of(d.half_edge))) continue;
    ++crossing;
    if (crossing % 2 == 1) {
      label[d.half_edge] = crossing;
      label[map.partner(d.half_edge)] = crossing + 1;
    }
  }
  const int buds = 2 * static_cast<int>(map.twists().size());
  BudSystem out;
  out.half_edge.assign(buds, -1);
  for (HalfEdge h = 0; h < map.num_half_edges(); ++h) {
    if (!map.is_twist(map.edge_of(h))) continue;
    if (label[h] == 0) throw std::logic_error("twist without an odd crossing");
    out.half_edge[label[h] - 1] = h;
  }
  auto succ = bud_successor(map);
  out.sigma.resize(buds);
  out.alpha.resize(buds);
  for (int i = 0; i < buds; ++i) {
    HalfEdge b = out.half_edge[i];
    out.sigma[i] = label[succ[b]];
    out.alpha[i] = label[map.partner(b)];
    if (out.sigma[i] == 1) out.r = i + 1;
  }
  return out;
}

CutGraph cut_graph(const RibbonMap& map) {
  CutGraph g{map.rotation_offsets(), map.rotation_data(), {}, {}};
  for (EdgeId e = 0; e < map.num_edges(); ++e) {
    if (map.is_twist(e)) {
      g.buds.push_back(map.edge(e)[0]);
      g.buds.push_back(map.edge(e)[1]);
    } else {
      g.edges.push_back(map.edge(e));
    }
  }
  std::sort(g.buds.begin(), g.buds.end());
  return g;
}

namespace {

RibbonMap prepare_non_orientable(const RibbonMap& map) {
  require_precubic(map);
  RibbonMap c = canonical_orientation(map);
  if (c.twists().empty()) throw Error(ErrorKind::orientable_input, "");
  return c;
}

RibbonMap rematch(const RibbonMap& c, const std::vector<HalfEdge>& image) {
  auto edges = c.edges();
  for (EdgeId e = 0; e < c.num_edges(); ++e) {
    if (c.is_twist(e)) edges[e] = {image[edges[e][0]], image[edges[e][1]]};
  }
  return RibbonMap(std::move(edges), rotations_of(c), c.twists(), c.root());
}

}  // namespace

RibbonMap phi(const RibbonMap& map) {
  RibbonMap c = prepare_non_orientable(map);
  return rematch(c, bud_successor(c));
}

RibbonMap phi_inverse(const RibbonMap& map) {
  RibbonMap c = prepare_non_orientable(map);
  auto succ = bud_successor(c);
  std::vector<HalfEdge> pred(succ.size(), -1);
  for (HalfEdge b = 0; b < static_cast<HalfEdge>(succ.size()); ++b) {
    if (succ[b] >= 0) pred[succ[b]] = b;
  }
  return rematch(c, pred);
}

RibbonMap averaging_involution(const RibbonMap& map) {
  RibbonMap c = prepare_non_orientable(map);
  const int tau = classify(c).tau;
  const int mean = euler_type(c).twice_h - 1;
  if (tau > mean) return phi(c);
  if (tau < mean) return phi_inverse(c);
  return c;
}

namespace {

void require_projective(const RibbonMap& map) {
  require_precubic(map);
  if (!is_unicellular(map)) throw Error(ErrorKind::not_unicellular, "");
  if (euler_type(map).twice_h != 1) throw Error(ErrorKind::wrong_type, "expected a map of type 1/2");
}

}  // namespace

RemyDeletion remy_delete(const RibbonMap& map, VertexId leaf) {
  require_vertex(map, leaf);
  require_projective(map);
  if (map.degree(leaf) != 1) throw Error(ErrorKind::invalid_argument, "vertex " + std::to_string(leaf) + " is not a leaf");
  if (leaf == map.root_vertex()) throw Error(ErrorKind::root_leaf, "vertex " + std::to_string(leaf));

  const HalfEdge hl = map.rotation(leaf)[0];
  const HalfEdge hp = map.partner(hl);
  const VertexId p = map.vertex_of(hp);
  const HalfEdge x = map.next(hp);
  const HalfEdge y = map.next(x);
  if (map.partner(x) == y) throw Error(ErrorKind::invalid_argument, "leaf hangs on a loop");
  const HalfEdge big_x = map.partner(x);
  const HalfEdge big_y = map.partner(y);
  const EdgeId ex = map.edge_of(x);
  const EdgeId ey = map.edge_of(y);
  const EdgeId el = map.edge_of(hl);

  const int nh = map.num_half_edges();
  std::vector<HalfEdge> id(nh, -1);
  int next = 0;
  for (HalfEdge h = 0; h < nh; ++h) {
    if (h != hl && h != hp && h != x && h != y) id[h] = next++;
  }
  std::vector<std::array<HalfEdge, 2>> edges;
  std::vector<EdgeId> twists;
  EdgeSide marker;
  for (EdgeId e = 0; e < map.num_edges(); ++e) {
    if (e == el || e == ey) continue;
    bool twisted = map.is_twist(e);
    if (e == ex) {
      marker = {static_cast<EdgeId>(edges.size()), map.is_twist(ex) ? 0 : 1};
      twisted = map.is_twist(ex) != map.is_twist(ey);
      edges.push_back({id[big_x], id[big_y]});
    } else {
      edges.push_back({id[map.edge(e)[0]], id[map.edge(e)[1]]});
    }
    if (twisted) twists.push_back(static_cast<EdgeId>(edges.size()) - 1);
  }
  std::vector<std::vector<HalfEdge>> rotations;
  for (VertexId v = 0; v < map.num_vertices(); ++v) {
    if (v == leaf || v == p) continue;
    std::vector<HalfEdge> rot;
    for (HalfEdge h : map.rotation(v)) rot.push_back(id[h]);
    rotations.push_back(std::move(rot));
  }
  Flag root{id[map.root().half_edge], map.root().side};
  return {RibbonMap(std::move(edges), rotations, twists, root), marker};
}

RibbonMap remy_insert(const RibbonMap& map, EdgeSide marker) {
  if (marker.edge < 0 || marker.edge >= map.num_edges() || (marker.side != 0 && marker.side != 1)) {
    throw Error(ErrorKind::invalid_marker, "edge " + std::to_string(marker.edge) + " side " + std::to_string(marker.side));
  }
  require_projective(map);
  const int e = map.num_edges();
  const HalfEdge x = 2 * e;
  const HalfEdge y = 2 * e + 1;
  const HalfEdge hp = 2 * e + 2;
  const HalfEdge hl = 2 * e + 3;
  const auto [big_x, big_y] = map.edge(marker.edge);

  auto edges = map.edges();
  auto bits = map.twist_bits();
  const bool twist_x = marker.side == 0;
  const bool twist_y = map.is_twist(marker.edge) != twist_x;
  edges[marker.edge] = {big_x, x};
  bits[marker.edge] = twist_x;
  edges.push_back({big_y, y});
  bits.push_back(twist_y);
  edges.push_back({hp, hl});
  bits.push_back(0);

  auto rotations = rotations_of(map);
  rotations.push_back({hp, x, y});
  rotations.push_back({hl});
  return RibbonMap(std::move(edges), rotations, twists_from_bits(bits), map.root());
}

}  // namespace umap
