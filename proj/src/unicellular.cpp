#include "umap/unicellular.hpp"

#include <algorithm>
#include <numeric>

#include "umap/error.hpp"
#include "umap/map_io.hpp"

namespace umap {

Tour tour(const RibbonMap& map) {
  const int nh = map.num_half_edges();
  Tour t;
  t.corners.reserve(nh);
  t.departures.reserve(nh);
  t.label_after.assign(nh, 0);
  const Flag root = map.root();
  Flag dep = root;
  do {
    if (static_cast<int>(t.corners.size()) == nh) break;
    const HalfEdge h = dep.half_edge;
    Corner c;
    c.vertex = map.vertex_of(h);
    c.label = static_cast<int>(t.corners.size()) + 1;
    c.departure = h;
    if (dep.side == 0) {
      c.side = Side::left;
      c.first = map.prev(h);
      c.second = h;
      c.arrival = c.first;
    } else {
      c.side = Side::right;
      c.first = h;
      c.second = map.next(h);
      c.arrival = c.second;
    }
    t.label_after[c.first] = c.label;
    t.corners.push_back(c);
    t.departures.push_back(dep);
    dep = next_departure(map, dep);
  } while (dep != root);
  if (static_cast<int>(t.corners.size()) != nh || dep != root) {
    throw Error(ErrorKind::not_unicellular, "the root face visits " + std::to_string(t.corners.size()) + " of " +
                                                std::to_string(nh) + " corners");
  }
  return t;
}

bool is_unicellular(const RibbonMap& map) {
  const int nh = map.num_half_edges();
  Flag dep = map.root();
  int steps = 0;
  do {
    dep = next_departure(map, dep);
    ++steps;
  } while (dep != map.root() && steps <= nh);
  return steps == nh;
}

bool is_precubic(const RibbonMap& map) {
  for (VertexId v = 0; v < map.num_vertices(); ++v) {
    int d = map.degree(v);
    if (d != 1 && d != 3) return false;
  }
  return map.degree(map.root_vertex()) == 1;
}

namespace {

std::vector<int> left_minus_right(const RibbonMap& map, const Tour& t) {
  std::vector<int> balance(map.num_vertices(), 0);
  for (const Corner& c : t.corners) balance[c.vertex] += c.side == Side::left ? 1 : -1;
  return balance;
}

}  // namespace

RibbonMap canonical_orientation(const RibbonMap& map) {
  for (VertexId v = 0; v < map.num_vertices(); ++v) {
    if (map.degree(v) % 2 == 0) {
      throw Error(ErrorKind::canonical_convention_undefined, "vertex " + std::to_string(v) + " has even degree");
    }
  }
  Tour t = tour(map);
  auto balance = left_minus_right(map, t);
  std::vector<bool> flips(map.num_vertices());
  bool any = false;
  for (VertexId v = 0; v < map.num_vertices(); ++v) {
    flips[v] = balance[v] < 0;
    any = any || flips[v];
  }
  return any ? flip_vertices(map, flips) : map;
}

bool is_canonical(const RibbonMap& map) {
  Tour t = tour(map);
  auto balance = left_minus_right(map, t);
  return std::all_of(balance.begin(), balance.end(), [](int b) { return b > 0; });
}

char flavor_letter(Flavor f) { return static_cast<char>('A' + static_cast<int>(f)); }

std::optional<Flavor> parse_flavor(char c) {
  if (c >= 'a' && c <= 'd') c = static_cast<char>(c - 'a' + 'A');
  if (c < 'A' || c > 'D') return std::nullopt;
  return static_cast<Flavor>(c - 'A');
}

Classification classify(const RibbonMap& map) {
  if (!is_precubic(map)) throw Error(ErrorKind::not_precubic, "");
  Tour t = tour(map);
  {
    auto balance = left_minus_right(map, t);
    for (VertexId v = 0; v < map.num_vertices(); ++v) {
      if (balance[v] < 0) throw Error(ErrorKind::not_canonical, "vertex " + std::to_string(v) + " has a right majority");
    }
  }
  const int ne = map.num_edges();
  Classification out;

  std::vector<int> departed(map.num_half_edges(), 0);
  for (const Flag& d : t.departures) ++departed[d.half_edge];
  out.edge_ways.resize(ne);
  for (EdgeId e = 0; e < ne; ++e) {
    auto [a, b] = map.edge(e);
    out.edge_ways[e] = departed[a] == 1 && departed[b] == 1 ? EdgeWay::two_way : EdgeWay::one_way;
  }

  out.twist_directions.assign(ne, TwistDirection::none);
  for (const Corner& c : t.corners) {
    for (HalfEdge h : {c.first, c.second}) {
      EdgeId e = map.edge_of(h);
      if (map.is_twist(e) && out.twist_directions[e] == TwistDirection::none) {
        out.twist_directions[e] = c.side == Side::left ? TwistDirection::left_to_right : TwistDirection::right_to_left;
      }
    }
  }
  for (auto d : out.twist_directions) {
    if (d == TwistDirection::left_to_right) ++out.t_lr;
    if (d == TwistDirection::right_to_left) ++out.t_rl;
  }

  out.nodes.resize(map.num_vertices());
  for (VertexId v = 0; v < map.num_vertices(); ++v) {
    if (map.degree(v) != 3) continue;
    auto rot = map.rotation(v);
    int start = 0;
    for (int i = 1; i < 3; ++i) {
      if (t.label_after[rot[i]] < t.label_after[rot[start]]) start = i;
    }
    NodeReport node;
    for (int i = 0; i < 3; ++i) node.corners[i] = rot[(start + i) % 3];
    node.intertwined = t.label_after[node.corners[2]] < t.label_after[node.corners[1]];
    int right_at = -1;
    for (int i = 0; i < 3; ++i) {
      if (t.corner_after(node.corners[i]).side == Side::right) right_at = i;
    }
    node.flavor = right_at < 0 ? Flavor::A : static_cast<Flavor>(right_at + 1);
    if (node.intertwined) {
      ++out.tau;
      ++out.flavor_counts[static_cast<int>(node.flavor)];
    }
    out.nodes[v] = node;
  }

  for (HalfEdge h = 0; h < map.num_half_edges(); ++h) {
    if (t.label_after[map.next(h)] <= t.label_after[h]) {
      ++out.dsc;
    } else {
      ++out.asc;
    }
  }
  return out;
}

bool trisection_identity(const RibbonMap& map) {
  Classification c = classify(map);
  return c.tau == euler_type(map).twice_h + c.t_rl - c.t_lr;
}

namespace {

/// Mutable working copy used by pruning and contraction.
struct Workspace {
  std::vector<HalfEdge> partner;
  std::vector<std::uint8_t> twist;  // per half-edge, equal on both halves
  std::vector<std::vector<HalfEdge>> rotations;
  std::vector<VertexId> vertex_of;
  std::vector<char> alive;

  explicit Workspace(const RibbonMap& map)
      : partner(map.num_half_edges()),
        twist(map.num_half_edges()),
        rotations(map.num_vertices()),
        vertex_of(map.num_half_edges()),
        alive(map.num_half_edges(), 1) {
    for (HalfEdge h = 0; h < map.num_half_edges(); ++h) {
      partner[h] = map.partner(h);
      twist[h] = map.is_twist(map.edge_of(h)) ? 1 : 0;
      vertex_of[h] = map.vertex_of(h);
    }
    for (VertexId v = 0; v < map.num_vertices(); ++v) {
      auto rot = map.rotation(v);
      rotations[v].assign(rot.begin(), rot.end());
    }
  }

  void erase(HalfEdge h) {
    alive[h] = 0;
    auto& rot = rotations[vertex_of[h]];
    rot.erase(std::find(rot.begin(), rot.end(), h));
  }

  /// Builds a compact map, rooting it at the first flag of `order` that survives.
  RibbonMap compact(const std::vector<Flag>& order) const {
    const int nh = static_cast<int>(partner.size());
    std::vector<HalfEdge> id(nh, -1);
    int next = 0;
    for (HalfEdge h = 0; h < nh; ++h) {
      if (alive[h]) id[h] = next++;
    }
    std::vector<std::array<HalfEdge, 2>> edges;
    std::vector<EdgeId> twists;
    for (HalfEdge h = 0; h < nh; ++h) {
      if (!alive[h] || partner[h] < h) continue;
      if (twist[h]) twists.push_back(static_cast<EdgeId>(edges.size()));
      edges.push_back({id[h], id[partner[h]]});
    }
    std::vector<std::vector<HalfEdge>> rots;
    for (const auto& rot : rotations) {
      if (rot.empty()) continue;
      std::vector<HalfEdge> mapped;
      for (HalfEdge h : rot) mapped.push_back(id[h]);
      rots.push_back(std::move(mapped));
    }
    Flag root{};
    for (const Flag& f : order) {
      if (alive[f.half_edge]) {
        root = {id[f.half_edge], f.side};
        break;
      }
    }
    return RibbonMap(std::move(edges), rots, twists, root);
  }
};

}  // namespace

CoreScheme core_scheme(const RibbonMap& map) {
  Tour t = tour(map);
  Workspace ws(map);

  std::vector<VertexId> leaves;
  for (VertexId v = 0; v < map.num_vertices(); ++v) {
    if (ws.rotations[v].size() == 1) leaves.push_back(v);
  }
  while (!leaves.empty()) {
    VertexId v = leaves.back();
    leaves.pop_back();
    if (ws.rotations[v].size() != 1) continue;
    HalfEdge h = ws.rotations[v].front();
    HalfEdge p = ws.partner[h];
    VertexId w = ws.vertex_of[p];
    ws.erase(h);
    ws.erase(p);
    if (ws.rotations[w].size() == 1) leaves.push_back(w);
  }
  if (std::none_of(ws.alive.begin(), ws.alive.end(), [](char a) { return a != 0; })) {
    throw Error(ErrorKind::tree_input, "leaf pruning leaves nothing");
  }
  CoreScheme out{ws.compact(t.departures), RibbonMap{}, false};

  bool changed = true;
  while (changed) {
    changed = false;
    for (VertexId w = 0; w < static_cast<VertexId>(ws.rotations.size()); ++w) {
      auto& rot = ws.rotations[w];
      if (rot.size() != 2) continue;
      HalfEdge x = rot[0];
      HalfEdge y = rot[1];
      if (ws.partner[x] == y) continue;
      HalfEdge px = ws.partner[x];
      HalfEdge py = ws.partner[y];
      std::uint8_t tw = ws.twist[x] ^ ws.twist[y];
      ws.alive[x] = ws.alive[y] = 0;
      rot.clear();
      ws.partner[px] = py;
      ws.partner[py] = px;
      ws.twist[px] = ws.twist[py] = tw;
      changed = true;
    }
  }
  out.scheme = ws.compact(t.departures);
  out.dominant = true;
  for (VertexId v = 0; v < out.scheme.num_vertices(); ++v) {
    if (out.scheme.degree(v) != 3) out.dominant = false;
  }
  return out;
}

Flag NormalForm::transport(Flag f) const {
  // flips is indexed by old half-edge here (see normal_form)
  return {half_edge_map[f.half_edge], f.side ^ (flips[f.half_edge] ? 1 : 0)};
}

NormalForm normal_form(const RibbonMap& map) {
  Tour t = tour(map);
  std::vector<bool> flips(map.num_vertices(), false);
  std::vector<char> seen(map.num_vertices(), 0);
  for (const Corner& c : t.corners) {
    if (seen[c.vertex]) continue;
    seen[c.vertex] = 1;
    flips[c.vertex] = c.side == Side::right;
  }
  RibbonMap oriented = flip_vertices(map, flips);

  const int nh = map.num_half_edges();
  std::vector<HalfEdge> id(nh, -1);
  std::vector<VertexId> vertex_id(map.num_vertices(), -1);
  std::vector<VertexId> vertex_order;
  int next = 0;
  for (const Flag& d : t.departures) {
    for (HalfEdge h : {d.half_edge, map.partner(d.half_edge)}) {
      if (id[h] == -1) id[h] = next++;
    }
    VertexId v = map.vertex_of(d.half_edge);
    if (vertex_id[v] == -1) {
      vertex_id[v] = static_cast<VertexId>(vertex_order.size());
      vertex_order.push_back(v);
    }
  }

  std::vector<std::vector<HalfEdge>> rotations;
  for (VertexId v : vertex_order) {
    auto rot = oriented.rotation(v);
    std::vector<HalfEdge> mapped;
    for (HalfEdge h : rot) mapped.push_back(id[h]);
    std::rotate(mapped.begin(), std::min_element(mapped.begin(), mapped.end()), mapped.end());
    rotations.push_back(std::move(mapped));
  }
  std::vector<std::array<HalfEdge, 2>> edges;
  std::vector<EdgeId> twists;
  std::vector<HalfEdge> old_of(nh);
  for (HalfEdge h = 0; h < nh; ++h) old_of[id[h]] = h;
  for (HalfEdge n = 0; n < nh; ++n) {
    HalfEdge other = id[map.partner(old_of[n])];
    if (other < n) continue;
    if (oriented.is_twist(map.edge_of(old_of[n]))) twists.push_back(static_cast<EdgeId>(edges.size()));
    edges.push_back({n, other});
  }
  Flag root{id[oriented.root().half_edge], oriented.root().side};

  NormalForm nf{RibbonMap(std::move(edges), rotations, twists, root), std::move(id), {}};
  nf.flips.resize(nh);
  for (HalfEdge h = 0; h < nh; ++h) nf.flips[h] = flips[map.vertex_of(h)];
  return nf;
}

std::string rooted_key(const RibbonMap& map) { return serialize(normal_form(map).map); }

}  // namespace umap
