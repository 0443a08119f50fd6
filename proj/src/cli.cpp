#include "umap/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "umap/bijections.hpp"
#include "umap/enumeration.hpp"
#include "umap/error.hpp"
#include "umap/formulas.hpp"
#include "umap/map_io.hpp"
#include "umap/unicellular.hpp"
#include "umap/verify.hpp"

namespace umap {
namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Range {
  int lo = 0;
  int hi = 0;
};

/// "a" or "a..b"
Range parse_range(const std::string& text, const std::string& flag) {
  auto bad = [&] { return UsageError(flag + ": expected an integer or a range a..b, got '" + text + "'"); };
  auto number = [&](const std::string& s) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(s, &used);
    } catch (const std::exception&) {
      throw bad();
    }
    if (used != s.size()) throw bad();
    return v;
  };
  const auto dots = text.find("..");
  Range r;
  if (dots == std::string::npos) {
    r.lo = r.hi = number(text);
  } else {
    r.lo = number(text.substr(0, dots));
    r.hi = number(text.substr(dots + 2));
  }
  if (r.lo > r.hi) throw bad();
  return r;
}

Tristate parse_tristate(const std::string& s) {
  if (s == "yes") return Tristate::yes;
  if (s == "no") return Tristate::no;
  return Tristate::any;
}

int edge_cap(std::optional<int> flag) {
  try {
    return resolve_edge_cap(flag);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

std::string read_all(std::istream& in) { return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()}; }

/// Value of the first "# key: value" comment line, if any.
std::optional<std::string> comment_value(const std::string& text, const std::string& key) {
  std::istringstream lines(text);
  std::string line;
  const std::string prefix = "# " + key + ":";
  while (std::getline(lines, line)) {
    if (line.rfind(prefix, 0) == 0) return line.substr(prefix.size());
  }
  return std::nullopt;
}

std::vector<int> parse_ints(const std::string& text) {
  std::string s = text;
  std::replace(s.begin(), s.end(), ',', ' ');
  std::istringstream in(s);
  std::vector<int> out;
  int v = 0;
  while (in >> v) out.push_back(v);
  if (!in.eof()) throw UsageError("expected integers, got '" + text + "'");
  return out;
}

// count ------------------------------------------------------------------

struct CountArgs {
  std::string family;
  std::string twice_h = "0";
  std::string m = "0";
  std::string n = "1";
  int precision = 50;
  std::string format = "tsv";
};

int cmd_count(const CountArgs& a, std::ostream& out) {
  const Range tr = parse_range(a.twice_h, "--twice-h");
  const Range mr = parse_range(a.m, "--m");
  const Range nr = parse_range(a.n, "--n");
  if (tr.lo < 0 || mr.lo < 0 || nr.lo < 1) throw UsageError("sizes must be non-negative");
  if (a.precision < 1 || a.precision > 10000) throw UsageError("--precision must be in 1..10000");

  auto emit = [&](int t, const std::string& size, const std::string& value) {
    if (a.format == "ndjson") {
      json row{{"family", a.family}, {"twice_h", t}, {"value", value}};
      if (size != "-") row[a.family == "kappa" ? "n" : "m"] = std::stoi(size);
      out << row.dump() << '\n';
    } else {
      out << a.family << '\t' << t << '\t' << size << '\t' << value << '\n';
    }
  };

  const bool single = tr.lo == tr.hi;
  for (int t = tr.lo; t <= tr.hi; ++t) {
    const HalfInteger h{t};
    // values outside a family's domain are skipped inside ranges
    if (!single && ((t == 0 && a.family != "xi") || (a.family == "c" && t % 2 != 0) || (a.family == "marked" && t < 2))) {
      continue;
    }
    if (a.family == "c") {
      if (t % 2 != 0 || t == 0) throw UsageError("c needs an even positive --twice-h");
      emit(t, "-", c_const(t / 2).str());
    } else if (a.family == "K") {
      if (t == 0) throw UsageError("K needs a positive --twice-h");
      emit(t, "-", k_const(h).str());
    } else if (a.family == "kappa") {
      if (t == 0) throw UsageError("kappa needs a positive --twice-h");
      for (int n = nr.lo; n <= nr.hi; ++n) emit(t, std::to_string(n), asymptotic_kappa(h, n, a.precision));
    } else {
      for (int m = mr.lo; m <= mr.hi; ++m) {
        BigCount v;
        if (a.family == "eta") {
          if (t == 0) throw UsageError("eta needs a positive --twice-h");
          v = eta(h, m);
        } else if (a.family == "xi") {
          v = t % 2 == 0 ? xi(t / 2, m) : BigCount(0);
        } else {
          if (t < 2) throw UsageError("marked needs --twice-h >= 2");
          v = marked_count(h, m);
        }
        emit(t, std::to_string(m), v.str());
      }
    }
  }
  return kExitOk;
}

// enumerate --------------------------------------------------------------

struct EnumerateArgs {
  int n = 1;
  bool precubic = false;
  std::string orientable = "any";
  std::vector<int> twice_h;
  bool root_at_leaf = false;
  bool classify = false;
  bool dominance = false;
  int jobs = 1;
  std::string format = "tsv";
  std::string dump;
  std::optional<int> edge_cap;
};

int cmd_enumerate(const EnumerateArgs& a, std::ostream& out) {
  if (a.classify && !a.precubic) throw UsageError("--classify needs --precubic");
  EnumerateOptions opt;
  opt.filter.precubic = a.precubic;
  opt.filter.orientable = parse_tristate(a.orientable);
  if (!a.twice_h.empty()) opt.filter.twice_h = std::set<int>(a.twice_h.begin(), a.twice_h.end());
  opt.filter.root_at_leaf = a.root_at_leaf;
  opt.classify = a.classify;
  opt.dominance = a.dominance;
  opt.dump = !a.dump.empty();
  opt.jobs = a.jobs;
  opt.edge_cap = edge_cap(a.edge_cap);
  CountTable table = enumerate(a.n, opt);
  if (opt.dump) {
    std::ofstream file(a.dump);
    if (!file) throw UsageError("cannot write " + a.dump);
    for (const auto& w : table.witnesses) file << w;
  }
  out << (a.format == "ndjson" ? table.to_ndjson() : table.to_tsv());
  return kExitOk;
}

// verify -----------------------------------------------------------------

struct VerifyArgs {
  std::string suite = "all";
  int max_edges = 7;
  std::optional<int> twice_h;
  std::optional<int> m;
  int jobs = 1;
  std::string format = "tsv";
  std::optional<int> edge_cap;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  VerifyOptions opt;
  opt.max_edges = a.max_edges;
  opt.twice_h = a.twice_h;
  opt.m = a.m;
  opt.jobs = a.jobs;
  opt.edge_cap = edge_cap(a.edge_cap);
  if (a.twice_h.has_value() != a.m.has_value()) throw UsageError("--twice-h and --m go together");
  if (a.twice_h && *a.twice_h < 1) throw UsageError("--twice-h must be positive");
  if (a.twice_h && precubic_edges(*a.twice_h, *a.m) > opt.edge_cap) {
    throw Error(ErrorKind::size_over_cap, std::to_string(precubic_edges(*a.twice_h, *a.m)) + " edges exceeds the cap of " +
                                              std::to_string(opt.edge_cap) + " (raise it with UMAP_MAX_EDGES)");
  }

  auto results = run_suite(a.suite, opt);
  int failed = 0;
  for (const auto& r : results) {
    if (!r.passed) ++failed;
    std::string first = r.detail.substr(0, r.detail.find('\n'));
    out << (r.passed ? "PASS" : "FAIL") << "  " << r.suite << ": " << r.name;
    if (!first.empty()) out << " (" << first << ')';
    out << '\n';
    if (!r.passed && first.size() < r.detail.size()) {
      std::istringstream rest(r.detail.substr(first.size() + 1));
      std::string line;
      while (std::getline(rest, line)) out << "      " << line << '\n';
    }
  }
  if (a.format == "ndjson") {
    for (const auto& r : results) {
      out << json{{"suite", r.suite}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}}.dump() << '\n';
    }
    out << json{{"checks", results.size()}, {"failed", failed}}.dump() << '\n';
  } else {
    out << results.size() - failed << '/' << results.size() << " checks passed\n";
  }
  return failed == 0 ? kExitOk : kExitFailure;
}

// apply ------------------------------------------------------------------

struct ApplyArgs {
  std::string op;
  std::optional<int> vertex;
  std::string leaves;
  std::string flavor;
  std::optional<int> leaf;
  std::optional<int> edge;
  std::optional<int> side;
};

int cmd_apply(const ApplyArgs& a, std::istream& in, std::ostream& out) {
  const std::string text = read_all(in);
  const RibbonMap map = parse_map(text);

  if (a.op == "open") {
    if (!a.vertex) throw UsageError("open needs --vertex");
    Opening o = open(map, *a.vertex);
    out << serialize(o.triple.map);
    out << "# leaves: " << o.triple.leaves[0] << ' ' << o.triple.leaves[1] << ' ' << o.triple.leaves[2] << '\n';
    out << "# flavor: " << flavor_letter(o.flavor) << '\n';
  } else if (a.op == "glue") {
    std::string leaves = a.leaves.empty() ? comment_value(text, "leaves").value_or("") : a.leaves;
    std::string letter = a.flavor.empty() ? comment_value(text, "flavor").value_or("") : a.flavor;
    letter.erase(std::remove(letter.begin(), letter.end(), ' '), letter.end());
    auto ids = parse_ints(leaves);
    if (ids.size() != 3) throw UsageError("glue needs three leaves (--leaves a,b,c or a '# leaves:' line)");
    if (letter.size() != 1 || !parse_flavor(letter[0])) {
      throw UsageError("glue needs a flavor A-D (--flavor or a '# flavor:' line)");
    }
    MarkedTriple triple{map, {ids[0], ids[1], ids[2]}};
    out << serialize(glue(triple, *parse_flavor(letter[0])));
  } else if (a.op == "phi") {
    out << serialize(phi(map));
  } else if (a.op == "phi-inverse") {
    out << serialize(phi_inverse(map));
  } else if (a.op == "avg") {
    out << serialize(averaging_involution(map));
  } else if (a.op == "remy-delete") {
    if (!a.leaf) throw UsageError("remy-delete needs --leaf");
    RemyDeletion d = remy_delete(map, *a.leaf);
    out << serialize(d.map) << "# marker: " << d.marker.edge << ' ' << d.marker.side << '\n';
  } else {
    EdgeSide marker;
    if (a.edge && a.side) {
      marker = {*a.edge, *a.side};
    } else if (!a.edge && !a.side) {
      auto ids = parse_ints(comment_value(text, "marker").value_or(""));
      if (ids.size() != 2) throw UsageError("remy-insert needs --edge and --side (or a '# marker:' line)");
      marker = {ids[0], ids[1]};
    } else {
      throw UsageError("--edge and --side go together");
    }
    out << serialize(remy_insert(map, marker));
  }
  return kExitOk;
}

// stats ------------------------------------------------------------------

struct StatsArgs {
  std::optional<int> twice_h;
  std::optional<int> m;
  std::string orientable = "any";
  bool per_map = false;
  bool dominance = false;
  std::optional<int> max_edges;
  int jobs = 1;
  std::string format = "tsv";
  std::optional<int> edge_cap;
};

json map_record(const RibbonMap& raw) {
  const RibbonMap map = canonical_orientation(raw);
  const HalfType type = euler_type(map);
  const Classification cl = classify(map);
  const bool dominant = type.twice_h > 0 && core_scheme(map).dominant;
  return json{{"edges", map.num_edges()},
              {"twice_h", type.twice_h},
              {"orientable", type.orientable},
              {"tau", cl.tau},
              {"t_lr", cl.t_lr},
              {"t_rl", cl.t_rl},
              {"dsc", cl.dsc},
              {"asc", cl.asc},
              {"flavors",
               {{"A", cl.flavor_counts[0]}, {"B", cl.flavor_counts[1]}, {"C", cl.flavor_counts[2]}, {"D", cl.flavor_counts[3]}}},
              {"dominant", dominant}};
}

int dominance_report(const StatsArgs& a, int cap, std::ostream& out) {
  const int max_edges = a.max_edges.value_or(cap);
  if (max_edges > cap) {
    throw Error(ErrorKind::size_over_cap, std::to_string(max_edges) + " edges exceeds the cap of " + std::to_string(cap) +
                                              " (raise it with UMAP_MAX_EDGES)");
  }
  const int t = a.twice_h.value_or(1);
  if (t < 1) throw UsageError("--twice-h must be positive for --dominance");
  double previous = -1;
  bool monotone = true;
  if (a.format != "ndjson") out << "n\ttotal\tdominant\tfraction\n";
  for (int n = 1; n <= max_edges; ++n) {
    EnumerateOptions opt;
    opt.filter.twice_h = std::set<int>{t};
    opt.dominance = true;
    opt.jobs = a.jobs;
    opt.edge_cap = cap;
    CountTable table = enumerate(n, opt);
    const std::uint64_t total = table.total();
    if (total == 0) continue;
    const double fraction = static_cast<double>(table.dominant) / static_cast<double>(total);
    if (fraction < previous) monotone = false;
    previous = fraction;
    if (a.format == "ndjson") {
      out << json{{"n", n}, {"twice_h", t}, {"total", total}, {"dominant", table.dominant}, {"fraction", fraction}}.dump()
          << '\n';
    } else {
      out << n << '\t' << total << '\t' << table.dominant << '\t' << std::fixed << std::setprecision(6) << fraction
          << '\n';
    }
  }
  if (a.format == "ndjson") {
    out << json{{"non_decreasing", monotone}}.dump() << '\n';
  } else {
    out << "# dominant fraction non-decreasing: " << (monotone ? "yes" : "no") << '\n';
  }
  return kExitOk;
}

int cmd_stats(const StatsArgs& a, std::ostream& out) {
  const int cap = edge_cap(a.edge_cap);
  if (a.dominance) return dominance_report(a, cap, out);
  if (!a.twice_h || !a.m) throw UsageError("stats needs --twice-h and --m (or --dominance)");
  if (*a.twice_h < 0 || *a.m < 0) throw UsageError("sizes must be non-negative");

  CensusFilter filter;
  filter.precubic = true;
  filter.orientable = parse_tristate(a.orientable);
  filter.twice_h = std::set<int>{*a.twice_h};
  const int n = precubic_edges(*a.twice_h, *a.m);

  if (a.per_map) {
    if (n > cap) {
      throw Error(ErrorKind::size_over_cap, std::to_string(n) + " edges exceeds the cap of " + std::to_string(cap) +
                                                " (raise it with UMAP_MAX_EDGES)");
    }
    for_each_map(n, filter, cap, [&](const RibbonMap& map) { out << map_record(map).dump() << '\n'; });
    return kExitOk;
  }

  EnumerateOptions opt;
  opt.filter = filter;
  opt.classify = true;
  opt.dominance = true;
  opt.jobs = a.jobs;
  opt.edge_cap = cap;
  CountTable table = enumerate(n, opt);
  if (a.format == "ndjson") {
    out << table.to_ndjson();
    return kExitOk;
  }
  out << "edges\t" << n << '\n';
  out << "count\t" << table.total() << '\n';
  out << "tau_sum\t" << table.tau_sum << '\n';
  for (const auto& [t, c] : table.tau_histogram) out << "tau=" << t << '\t' << c << '\n';
  for (int f = 0; f < 4; ++f) out << "flavor=" << flavor_letter(static_cast<Flavor>(f)) << '\t' << table.flavor_counts[f] << '\n';
  if (*a.twice_h > 0) out << "dominant\t" << table.dominant << '\n';
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Unicellular maps on locally orientable surfaces", "umap"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "umap 1.0");

  const std::vector<std::string> formats{"tsv", "ndjson"};
  const std::vector<std::string> tristates{"yes", "no", "any"};

  CountArgs count_args;
  auto* count = app.add_subcommand("count", "Closed-form counts");
  count->add_option("--family", count_args.family, "eta, xi, marked, c, K or kappa")
      ->required()
      ->check(CLI::IsMember({"eta", "xi", "marked", "c", "K", "kappa"}));
  count->add_option("--twice-h", count_args.twice_h, "2h, or a range a..b");
  count->add_option("--m", count_args.m, "m, or a range a..b");
  count->add_option("--n", count_args.n, "edge count for kappa, or a range a..b");
  count->add_option("--precision", count_args.precision, "decimal digits for kappa");
  count->add_option("--format", count_args.format)->check(CLI::IsMember(formats));

  EnumerateArgs enum_args;
  auto* enumerate_cmd = app.add_subcommand("enumerate", "Census of one-face maps with n edges");
  enumerate_cmd->add_option("--n", enum_args.n, "edge count")->required()->check(CLI::Range(1, kMaxEdgeCap));
  enumerate_cmd->add_flag("--precubic", enum_args.precubic);
  enumerate_cmd->add_option("--orientable", enum_args.orientable)->check(CLI::IsMember(tristates));
  enumerate_cmd->add_option("--twice-h", enum_args.twice_h, "allowed values of 2h")->delimiter(',');
  enumerate_cmd->add_flag("--root-at-leaf", enum_args.root_at_leaf);
  enumerate_cmd->add_flag("--classify", enum_args.classify, "tau and flavor distributions");
  enumerate_cmd->add_flag("--dominance", enum_args.dominance, "count dominant maps");
  enumerate_cmd->add_option("--jobs", enum_args.jobs)->check(CLI::Range(1, 256));
  enumerate_cmd->add_option("--format", enum_args.format)->check(CLI::IsMember(formats));
  enumerate_cmd->add_option("--dump", enum_args.dump, "write the maps passing the filter to FILE");
  enumerate_cmd->add_option("--edge-cap", enum_args.edge_cap, "largest allowed n (also UMAP_MAX_EDGES)");

  VerifyArgs verify_args;
  std::vector<std::string> suites = suite_names();
  suites.push_back("all");
  auto* verify = app.add_subcommand("verify", "Check identities against the enumerator");
  verify->add_option("--suite", verify_args.suite)->check(CLI::IsMember(suites));
  verify->add_option("--max-edges", verify_args.max_edges)->check(CLI::Range(1, kMaxEdgeCap));
  verify->add_option("--twice-h", verify_args.twice_h, "restrict the phi suite to one type");
  verify->add_option("--m", verify_args.m);
  verify->add_option("--jobs", verify_args.jobs)->check(CLI::Range(1, 256));
  verify->add_option("--format", verify_args.format)->check(CLI::IsMember(formats));
  verify->add_option("--edge-cap", verify_args.edge_cap);

  ApplyArgs apply_args;
  auto* apply = app.add_subcommand("apply", "Transform a UMAP v1 map read from stdin");
  apply->add_option("--op", apply_args.op)
      ->required()
      ->check(CLI::IsMember({"open", "glue", "phi", "phi-inverse", "avg", "remy-delete", "remy-insert"}));
  apply->add_option("--vertex", apply_args.vertex, "node to open");
  apply->add_option("--leaves", apply_args.leaves, "three leaves to glue, in tour order");
  apply->add_option("--flavor", apply_args.flavor)->check(CLI::IsMember({"A", "B", "C", "D"}));
  apply->add_option("--leaf", apply_args.leaf, "leaf to delete");
  apply->add_option("--edge", apply_args.edge, "marked edge for remy-insert");
  apply->add_option("--side", apply_args.side)->check(CLI::IsMember({0, 1}));

  StatsArgs stats_args;
  auto* stats = app.add_subcommand("stats", "Distributions over a precubic census");
  stats->add_option("--twice-h", stats_args.twice_h);
  stats->add_option("--m", stats_args.m);
  stats->add_option("--orientable", stats_args.orientable)->check(CLI::IsMember(tristates));
  stats->add_flag("--per-map", stats_args.per_map, "one NDJSON record per map");
  stats->add_flag("--dominance", stats_args.dominance, "dominant fraction for n = 1..max-edges");
  stats->add_option("--max-edges", stats_args.max_edges)->check(CLI::Range(1, kMaxEdgeCap));
  stats->add_option("--jobs", stats_args.jobs)->check(CLI::Range(1, 256));
  stats->add_option("--format", stats_args.format)->check(CLI::IsMember(formats));
  stats->add_option("--edge-cap", stats_args.edge_cap);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*count) return cmd_count(count_args, out);
    if (*enumerate_cmd) return cmd_enumerate(enum_args, out);
    if (*verify) return cmd_verify(verify_args, out);
    if (*apply) return cmd_apply(apply_args, in, out);
    return cmd_stats(stats_args, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << e.what() << '\n';
    return e.kind() == ErrorKind::size_over_cap ? kExitUsage : kExitFailure;
  }
}

}  // namespace umap
