#include "umap/verify.hpp"

#include <map>
#include <set>
#include <sstream>

#include "umap/bijections.hpp"
#include "umap/enumeration.hpp"
#include "umap/error.hpp"
#include "umap/formulas.hpp"
#include "umap/map_io.hpp"
#include "umap/unicellular.hpp"

namespace umap {

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"formulas", "trisection", "phi", "openglue", "remy"};
  return names;
}

namespace {

class Report {
 public:
  explicit Report(std::string suite) : suite_(std::move(suite)) {}

  void check(std::string name, bool passed, std::string detail = {}) {
    results_.push_back({suite_, std::move(name), passed, std::move(detail)});
  }

  template <class A, class B>
  void equal(std::string name, const A& got, const B& want) {
    std::ostringstream d;
    d << "got " << got << ", expected " << want;
    check(std::move(name), got == want, d.str());
  }

  /// Counts violations of one identity over a family of maps.
  struct Tally {
    std::uint64_t maps = 0;
    std::uint64_t violations = 0;
    std::string first;

    void record(bool ok, const RibbonMap& map) {
      ++maps;
      if (ok) return;
      if (violations++ == 0) first = serialize(map);
    }
  };

  void tally(std::string name, const Tally& t) {
    std::string detail = std::to_string(t.maps) + " maps, " + std::to_string(t.violations) + " violations";
    if (t.violations > 0) detail += "; first:\n" + t.first;
    check(std::move(name), t.violations == 0 && t.maps > 0, detail);
  }

  std::vector<CheckResult> take() { return std::move(results_); }

 private:
  std::string suite_;
  std::vector<CheckResult> results_;
};

std::string type_label(int twice_h, int m) { return "2h=" + std::to_string(twice_h) + ",m=" + std::to_string(m); }

CensusFilter precubic_only() {
  CensusFilter f;
  f.precubic = true;
  return f;
}

/// m such that a precubic map of type twice_h/2 has n edges, if any.
std::optional<int> size_of(int twice_h, int n) {
  const int rest = n - (twice_h % 2 == 0 ? 1 : 0);
  if (rest < 0 || rest % 2 != 0) return std::nullopt;
  return rest / 2;
}

std::vector<CheckResult> formulas_suite(const VerifyOptions& opt) {
  Report r("formulas");
  for (int n = 1; n <= opt.max_edges; ++n) {
    EnumerateOptions eo;
    eo.filter = precubic_only();
    eo.jobs = opt.jobs;
    eo.edge_cap = opt.edge_cap;
    CountTable table = enumerate(n, eo);
    std::set<std::pair<int, bool>> covered;
    for (int t = 0; t <= n + 1; ++t) {
      auto m = size_of(t, n);
      if (!m) continue;
      auto count = [&](bool orientable) {
        covered.insert({t, orientable});
        auto it = table.counts.find({t, orientable});
        return it == table.counts.end() ? std::uint64_t{0} : it->second;
      };
      if (t % 2 == 0) {
        BigCount want = xi(t / 2, *m);
        std::uint64_t got = count(true);
        if (got != 0 || want != 0) r.equal("xi(" + type_label(t, *m) + ")", got, want);
      }
      if (t > 0) {
        BigCount want = eta({t}, *m);
        std::uint64_t got = count(false);
        if (got != 0 || want != 0) r.equal("eta(" + type_label(t, *m) + ")", got, want);
      }
    }
    std::uint64_t stray = 0;
    for (const auto& [key, c] : table.counts) {
      if (!covered.contains(key)) stray += c;
    }
    r.equal("no precubic maps off the support, n=" + std::to_string(n), stray, std::uint64_t{0});
  }

  bool rec = true;
  bool remy = true;
  for (int t = 1; t <= 8; ++t) {
    for (int m = 0; m <= 30; ++m) {
      if (t >= 2 && !recursion_check({t}, m)) rec = false;
      if (m >= 1 && !remy_recursion_check({t}, m)) remy = false;
    }
  }
  r.check("gluing recursion for 2h<=8, m<=30", rec);
  r.check("leaf recursion for 2h<=8, 1<=m<=30", remy);
  bool c_ok = true;
  for (int h = 1; h <= 10; ++h) c_ok = c_ok && c_const(h) == c_const_recurrence(h);
  r.check("c_h closed form equals recurrence for h<=10", c_ok);
  return r.take();
}

std::vector<CheckResult> trisection_suite(const VerifyOptions& opt) {
  Report r("trisection");
  Report::Tally eq6, words, descents, by_nodes, two_way, range, leaves;
  for (int n = 1; n <= opt.max_edges; ++n) {
    for_each_map(n, precubic_only(), opt.edge_cap, [&](const RibbonMap& raw) {
      RibbonMap map = canonical_orientation(raw);
      Classification cl = classify(map);
      const int twice_h = euler_type(map).twice_h;
      const int e = map.num_edges();
      eq6.record(cl.tau == twice_h + cl.t_rl - cl.t_lr, map);
      words.record(cl.dsc + cl.asc == 2 * e, map);
      descents.record(cl.dsc == e + 1 + cl.t_rl - cl.t_lr, map);
      by_nodes.record(cl.dsc == cl.tau + map.num_vertices(), map);

      Tour t = tour(map);
      bool ok = true;
      for (EdgeId edge = 0; edge < e; ++edge) {
        if (cl.edge_ways[edge] == EdgeWay::two_way && map.is_twist(edge)) ok = false;
      }
      for (const Corner& c : t.corners) {
        for (HalfEdge h : {c.first, c.second}) {
          if (cl.edge_ways[map.edge_of(h)] == EdgeWay::two_way && c.side == Side::right) ok = false;
        }
      }
      two_way.record(ok, map);

      int nodes = 0;
      int non_root_leaves = 0;
      for (VertexId v = 0; v < map.num_vertices(); ++v) {
        if (map.degree(v) == 3) ++nodes;
        if (map.degree(v) == 1 && v != map.root_vertex()) ++non_root_leaves;
      }
      range.record(cl.tau >= 0 && cl.tau <= nodes, map);
      const int m = *size_of(twice_h, n);
      leaves.record(2 * non_root_leaves == 2 * m + 2 - 3 * twice_h - (twice_h % 2), map);
    });
  }
  r.tally("tau = 2h + T_RL - T_LR", eq6);
  r.tally("dsc + asc = 2e", words);
  r.tally("dsc = e + 1 + T_RL - T_LR", descents);
  r.tally("dsc = tau + v", by_nodes);
  r.tally("two-way edges are untwisted and touch left corners only", two_way);
  r.tally("0 <= tau <= number of nodes", range);
  r.tally("non-root leaf count", leaves);
  return r.take();
}

std::vector<std::pair<int, int>> non_orientable_classes(const VerifyOptions& opt) {
  std::vector<std::pair<int, int>> out;
  if (opt.twice_h || opt.m) {
    if (!opt.twice_h || !opt.m) throw Error(ErrorKind::invalid_argument, "give both twice_h and m");
    if (*opt.twice_h < 1) throw Error(ErrorKind::invalid_argument, "non-orientable maps have 2h >= 1");
    out.emplace_back(*opt.twice_h, *opt.m);
    return out;
  }
  for (int t = 1; 3 * t <= 2 * opt.max_edges + 2; ++t) {
    for (int m = 0; precubic_edges(t, m) <= opt.max_edges; ++m) {
      if (eta({t}, m) != 0) out.emplace_back(t, m);
    }
  }
  return out;
}

std::vector<CheckResult> phi_suite(const VerifyOptions& opt) {
  Report r("phi");
  for (auto [t, m] : non_orientable_classes(opt)) {
    const std::string label = type_label(t, m);
    auto maps = precubic_maps({t, false}, m, opt.edge_cap);
    std::set<std::string> keys;
    for (const auto& x : maps) keys.insert(rooted_key(x));

    Report::Tally tau_sum, canonical, left_inverse, right_inverse, involution, avg_sum, parity, cut;
    std::set<std::string> images;
    std::map<std::pair<int, int>, int> pairing;
    std::uint64_t total_tau = 0;
    for (const auto& x : maps) {
      RibbonMap y = phi(x);
      images.insert(rooted_key(y));
      const int tx = classify(x).tau;
      const int ty = classify(y).tau;
      total_tau += static_cast<std::uint64_t>(tx);
      ++pairing[{tx, ty}];
      tau_sum.record(tx + ty == 2 * t - 2, x);
      canonical.record(is_canonical(y), x);
      left_inverse.record(phi_inverse(y) == x, x);
      right_inverse.record(phi(phi_inverse(x)) == x, x);
      cut.record(cut_graph(x) == cut_graph(y), x);
      RibbonMap a = averaging_involution(x);
      involution.record(averaging_involution(a) == x, x);
      avg_sum.record(tx + classify(a).tau == 2 * t - 2, x);
      BudSystem bs = bud_system(x);
      bool odd_to_even = true;
      for (std::size_t i = 0; i < bs.sigma.size(); ++i) {
        if (i % 2 == 0 && bs.sigma[i] % 2 != 0) odd_to_even = false;
        if (i % 2 == 0 && bs.alpha[i] != static_cast<int>(i) + 2) odd_to_even = false;
      }
      parity.record(odd_to_even, x);
    }
    std::ostringstream pairs;
    for (const auto& [p, c] : pairing) pairs << ' ' << p.first << "->" << p.second << ':' << c;
    r.check("phi is a bijection of N(" + label + ")",
            images.size() == maps.size() && std::includes(keys.begin(), keys.end(), images.begin(), images.end()),
            std::to_string(maps.size()) + " maps, tau pairs" + pairs.str());
    r.tally("tau + tau(phi) = 4h - 2 on N(" + label + ")", tau_sum);
    r.tally("phi output is canonical on N(" + label + ")", canonical);
    r.tally("phi_inverse(phi(m)) = m on N(" + label + ")", left_inverse);
    r.tally("phi(phi_inverse(m)) = m on N(" + label + ")", right_inverse);
    r.tally("cut graphs of m and phi(m) agree on N(" + label + ")", cut);
    r.tally("averaging map is an involution on N(" + label + ")", involution);
    r.tally("averaging map tau sum on N(" + label + ")", avg_sum);
    r.tally("sigma maps odd buds to even on N(" + label + ")", parity);
    r.equal("sum of tau over N(" + label + ")", total_tau, static_cast<std::uint64_t>(t - 1) * maps.size());
  }
  return r.take();
}

/// Non-root leaves of a map in tour order.
std::vector<VertexId> leaves_in_tour_order(const RibbonMap& map) {
  std::vector<VertexId> out;
  for (const Corner& c : tour(map).corners) {
    if (map.degree(c.vertex) == 1 && c.vertex != map.root_vertex()) out.push_back(c.vertex);
  }
  return out;
}

std::vector<CheckResult> openglue_suite(const VerifyOptions& opt) {
  Report r("openglue");
  for (int n = 1; n <= opt.max_edges; ++n) {
    for (int t = 2; t <= n + 1; ++t) {
      auto m = size_of(t, n);
      if (!m) continue;
      const HalfInteger h{t};
      const std::string label = type_label(t, *m);
      // opening every marked map
      std::uint64_t marked_non_orientable = 0;
      std::uint64_t marked_orientable = 0;
      Report::Tally round_trip;
      for (bool orientable : {false, true}) {
        if (orientable && t % 2 != 0) continue;
        for (const auto& map : precubic_maps({t, orientable}, *m, opt.edge_cap)) {
          Classification cl = classify(map);
          for (VertexId v = 0; v < map.num_vertices(); ++v) {
            if (!cl.nodes[v] || !cl.nodes[v]->intertwined) continue;
            (orientable ? marked_orientable : marked_non_orientable) += 1;
            Opening o = open(map, v);
            bool ok = euler_type(o.triple.map).twice_h == t - 2 && o.triple.map.num_vertices() == map.num_vertices() + 2;
            ok = ok && flip_equivalent(glue(o.triple, o.flavor), map);
            round_trip.record(ok, map);
          }
        }
      }
      if (round_trip.maps == 0 && marked_count(h, *m) == 0) continue;
      r.tally("glue(open(m, v)) = m on " + label, round_trip);
      r.equal("non-orientable marked maps on " + label, marked_non_orientable, marked_count(h, *m));
      const BigCount orientable_marked = t % 2 == 0 ? binomial(ell(h, *m), 3) * xi(t / 2 - 1, *m) : BigCount(0);
      r.equal("orientable marked maps on " + label, marked_orientable, orientable_marked);

      // gluing every marked source
      Report::Tally reopen, orientability;
      std::set<std::pair<std::string, HalfEdge>> targets;
      std::uint64_t glued = 0;
      for (bool orientable : {false, true}) {
        if (t - 2 == 0 && !orientable) continue;
        if (orientable && t % 2 != 0) continue;
        for (const auto& source : precubic_maps({t - 2, orientable}, *m, opt.edge_cap)) {
          auto leaves = leaves_in_tour_order(source);
          for (std::size_t a = 0; a < leaves.size(); ++a) {
            for (std::size_t b = a + 1; b < leaves.size(); ++b) {
              for (std::size_t c = b + 1; c < leaves.size(); ++c) {
                MarkedTriple triple{source, {leaves[a], leaves[b], leaves[c]}};
                for (Flavor f : {Flavor::A, Flavor::B, Flavor::C, Flavor::D}) {
                  RibbonMap g = glue(triple, f);
                  ++glued;
                  const HalfEdge h1 = triple.leaf_half_edges()[0];
                  Opening o = open(g, g.vertex_of(h1));
                  reopen.record(o.flavor == f && o.triple.leaf_half_edges() == triple.leaf_half_edges() &&
                                    flip_equivalent(o.triple.map, source),
                                g);
                  orientability.record(is_orientable(g) == (orientable && f == Flavor::A), g);
                  NormalForm nf = normal_form(g);
                  targets.insert({serialize(nf.map), nf.map.vertex_of(nf.half_edge_map[h1])});
                }
              }
            }
          }
        }
      }
      r.tally("open(glue(t, F)) = (t, F) on " + label, reopen);
      r.tally("glued map orientable iff source orientable and F = A on " + label, orientability);
      r.equal("distinct marked maps from gluing on " + label, targets.size(), glued);
      r.equal("gluings match marked maps on " + label, glued, marked_non_orientable + marked_orientable);
    }
  }
  return r.take();
}

std::vector<CheckResult> remy_suite(const VerifyOptions& opt) {
  Report r("remy");
  for (int m = 1; 2 * (m + 1) <= opt.max_edges; ++m) {
    auto big = precubic_maps({1, false}, m + 1, opt.edge_cap);
    auto small = precubic_maps({1, false}, m, opt.edge_cap);
    Report::Tally round_trip, valid;
    std::set<std::pair<std::string, Flag>> landed;
    std::uint64_t choices = 0;
    for (const auto& map : big) {
      for (VertexId v = 0; v < map.num_vertices(); ++v) {
        if (map.degree(v) != 1 || v == map.root_vertex()) continue;
        ++choices;
        RemyDeletion d = remy_delete(map, v);
        valid.record(!validate(d.map) && is_precubic(d.map) && is_unicellular(d.map) && euler_type(d.map).twice_h == 1, map);
        RibbonMap back = remy_insert(d.map, d.marker);
        NormalForm before = normal_form(map);
        NormalForm after = normal_form(back);
        const HalfEdge new_leaf = back.rotation(back.num_vertices() - 1)[0];
        round_trip.record(before.map == after.map &&
                              before.half_edge_map[map.rotation(v)[0]] == after.half_edge_map[new_leaf],
                          map);
        NormalForm nf = normal_form(d.map);
        const Flag f{d.map.edge(d.marker.edge)[0], d.marker.side};
        landed.insert({serialize(nf.map), std::min(nf.transport(f), nf.transport(arrival_flag(d.map, f)))});
      }
    }
    const std::string sizes = "m=" + std::to_string(m + 1) + "->" + std::to_string(m);
    r.tally("deletions give projective precubic maps, " + sizes, valid);
    r.tally("remy_insert(remy_delete(x)) = x, " + sizes, round_trip);
    r.equal("distinct marked deletions, " + sizes, landed.size(), choices);
    r.equal("m * eta(m+1) = 4m * eta(m) enumerated, " + sizes, choices, 4 * static_cast<std::uint64_t>(m) * small.size());
    r.equal("m * eta(m+1) = 4m * eta(m) closed form, " + sizes, BigCount(m) * eta({1}, m + 1),
            BigCount(4 * m) * eta({1}, m));

    Report::Tally inverse, outputs;
    for (const auto& map : small) {
      for (EdgeId e = 0; e < map.num_edges(); ++e) {
        for (int side : {0, 1}) {
          RibbonMap grown = remy_insert(map, {e, side});
          outputs.record(!validate(grown) && is_precubic(grown) && is_unicellular(grown) && euler_type(grown).twice_h == 1,
                         map);
          RemyDeletion d = remy_delete(grown, grown.num_vertices() - 1);
          inverse.record(d.map == map && d.marker == EdgeSide{e, side}, map);
        }
      }
    }
    r.tally("insertions give projective precubic maps, m=" + std::to_string(m), outputs);
    r.tally("remy_delete(remy_insert(x)) = x, m=" + std::to_string(m), inverse);
  }
  return r.take();
}

}  // namespace

std::vector<CheckResult> run_suite(std::string_view suite, const VerifyOptions& options) {
  if (options.max_edges > options.edge_cap) {
    throw Error(ErrorKind::size_over_cap, std::to_string(options.max_edges) + " edges exceeds the cap of " +
                                              std::to_string(options.edge_cap) + " (raise it with UMAP_MAX_EDGES)");
  }
  if (suite == "all") {
    std::vector<CheckResult> all;
    for (const auto& name : suite_names()) {
      auto part = run_suite(name, options);
      all.insert(all.end(), part.begin(), part.end());
    }
    return all;
  }
  if (suite == "formulas") return formulas_suite(options);
  if (suite == "trisection") return trisection_suite(options);
  if (suite == "phi") return phi_suite(options);
  if (suite == "openglue") return openglue_suite(options);
  if (suite == "remy") return remy_suite(options);
  throw Error(ErrorKind::invalid_argument, "unknown suite '" + std::string(suite) + "'");
}

}  // namespace umap
