#include "umap/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "umap/error.hpp"
#include "umap/map_io.hpp"
#include "umap/unicellular.hpp"

namespace umap {

bool is_valid(const GluingCode& code) {
  const int sides = static_cast<int>(code.matching.size());
  if (sides == 0 || sides % 2 != 0) return false;
  if (static_cast<int>(code.twist_bits.size()) != sides / 2) return false;
  for (int i = 0; i < sides; ++i) {
    int j = code.matching[i];
    if (j < 0 || j >= sides || j == i || code.matching[j] != i) return false;
  }
  return true;
}

namespace {

/// Half-edges at both ends of every polygon side, for one code.
struct SideEnds {
  std::array<int, 2 * kMaxEdgeCap> start{};
  std::array<int, 2 * kMaxEdgeCap> end{};
};

/// Pair index and orientation of each side for a fixed matching.
struct MatchingInfo {
  int sides = 0;
  std::array<int, 2 * kMaxEdgeCap> pair{};
  std::array<bool, 2 * kMaxEdgeCap> first{};

  explicit MatchingInfo(const std::vector<int>& matching) : sides(static_cast<int>(matching.size())) {
    int p = 0;
    for (int i = 0; i < sides; ++i) {
      if (matching[i] > i) {
        pair[i] = pair[matching[i]] = p++;
        first[i] = true;
        first[matching[i]] = false;
      }
    }
  }

  template <class Bits>
  SideEnds ends(const Bits& bits) const {
    SideEnds s;
    for (int i = 0; i < sides; ++i) {
      int p = pair[i];
      bool forward = first[i] || bits[p];
      s.start[i] = forward ? 2 * p : 2 * p + 1;
      s.end[i] = forward ? 2 * p + 1 : 2 * p;
    }
    return s;
  }
};

struct QuickStats {
  int vertices = 0;
  int twice_h = 0;
  bool orientable = true;
  bool precubic = false;
  bool root_leaf = false;
};

int find(std::array<int, 2 * kMaxEdgeCap>& parent, int x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

QuickStats quick_stats(int n, const SideEnds& s, bool orientable) {
  const int sides = 2 * n;
  std::array<int, 2 * kMaxEdgeCap> parent{};
  std::array<int, 2 * kMaxEdgeCap> size{};
  for (int h = 0; h < sides; ++h) {
    parent[h] = h;
    size[h] = 1;
  }
  QuickStats q;
  q.vertices = sides;
  for (int k = 0; k < sides; ++k) {
    int a = find(parent, s.end[(k + sides - 1) % sides]);
    int b = find(parent, s.start[k]);
    if (a == b) continue;
    if (size[a] < size[b]) std::swap(a, b);
    parent[b] = a;
    size[a] += size[b];
    --q.vertices;
  }
  q.twice_h = n + 1 - q.vertices;
  q.orientable = orientable;
  q.precubic = true;
  for (int h = 0; h < sides; ++h) {
    if (parent[h] == h && size[h] != 1 && size[h] != 3) q.precubic = false;
  }
  q.root_leaf = size[find(parent, s.start[0])] == 1;
  q.precubic = q.precubic && q.root_leaf;
  return q;
}

bool passes(const CensusFilter& f, const QuickStats& q) {
  if (f.precubic && !q.precubic) return false;
  if (f.root_at_leaf && !q.root_leaf) return false;
  if (f.orientable == Tristate::yes && !q.orientable) return false;
  if (f.orientable == Tristate::no && q.orientable) return false;
  if (f.twice_h && !f.twice_h->contains(q.twice_h)) return false;
  return true;
}

RibbonMap decode_ends(int n, const SideEnds& s) {
  const int sides = 2 * n;
  auto a_of = [&](int k) { return s.end[(k + sides - 1) % sides]; };
  auto b_of = [&](int k) { return s.start[k]; };
  // two corner slots per half-edge
  std::vector<std::array<int, 2>> slots(sides, {-1, -1});
  for (int k = 0; k < sides; ++k) {
    for (int h : {a_of(k), b_of(k)}) {
      auto& sl = slots[h];
      (sl[0] < 0 ? sl[0] : sl[1]) = k;
    }
  }
  std::vector<char> visited(sides, 0);
  std::vector<int> after(sides, -1);
  std::vector<std::vector<HalfEdge>> rotations;
  for (int k0 = 0; k0 < sides; ++k0) {
    if (visited[k0]) continue;
    std::vector<HalfEdge> rot{a_of(k0)};
    int k = k0;
    while (true) {
      visited[k] = 1;
      int cur = rot.back();
      after[k] = cur;
      int nxt = cur == a_of(k) ? b_of(k) : a_of(k);
      int kk = slots[nxt][0] == k ? slots[nxt][1] : slots[nxt][0];
      if (visited[kk]) break;
      rot.push_back(nxt);
      k = kk;
    }
    rotations.push_back(std::move(rot));
  }
  std::vector<std::array<HalfEdge, 2>> edges(n);
  for (int p = 0; p < n; ++p) edges[p] = {2 * p, 2 * p + 1};
  std::vector<EdgeId> twists;
  std::vector<char> seen(n, 0);
  for (int k = 0; k < sides; ++k) {
    int p = s.start[k] / 2;
    if (seen[p]) continue;
    seen[p] = 1;
    bool left_here = after[k] == a_of(k);
    int k1 = (k + 1) % sides;
    bool left_next = after[k1] == a_of(k1);
    if (left_here != left_next) twists.push_back(p);
  }
  std::sort(twists.begin(), twists.end());
  return RibbonMap(std::move(edges), rotations, twists, Flag{s.start[0], 0});
}

/// Enumerates matchings with side 0 paired to `top` (or all when top < 0).
void for_each_matching(int n, int top, const std::function<void(const std::vector<int>&)>& f) {
  const int sides = 2 * n;
  std::vector<int> m(sides, -1);
  std::function<void()> rec = [&] {
    int i = 0;
    while (i < sides && m[i] >= 0) ++i;
    if (i == sides) {
      f(m);
      return;
    }
    for (int j = i + 1; j < sides; ++j) {
      if (m[j] >= 0) continue;
      m[i] = j;
      m[j] = i;
      rec();
      m[i] = m[j] = -1;
    }
  };
  if (top >= 0) {
    m[0] = top;
    m[top] = 0;
  }
  rec();
}

std::uint64_t double_factorial_u64(int n) {
  std::uint64_t r = 1;
  for (int i = n; i > 1; i -= 2) r *= static_cast<std::uint64_t>(i);
  return r;
}

void check_size(int n, int edge_cap) {
  if (n < 1) throw Error(ErrorKind::invalid_argument, "edge count must be positive");
  if (n > edge_cap) {
    throw Error(ErrorKind::size_over_cap,
                std::to_string(n) + " edges exceeds the cap of " + std::to_string(edge_cap) + " (raise it with UMAP_MAX_EDGES)");
  }
}

/// A root leaf means sides 0 and 2n−1 are glued in opposite directions, so
/// the other branches and the odd bit words (pair 0 is {0, 2n−1}) are skipped.
bool needs_root_leaf(const CensusFilter& f) { return f.precubic || f.root_at_leaf; }

void run_branch(int n, int top, const EnumerateOptions& opt, CountTable& table) {
  const std::uint32_t limit = 1u << n;
  const bool root_leaf = needs_root_leaf(opt.filter);
  if (root_leaf && top != 2 * n - 1) {
    table.codes += static_cast<std::uint64_t>(double_factorial_u64(2 * n - 3)) * limit;
    return;
  }
  std::vector<std::uint8_t> bits(n);
  for_each_matching(n, top, [&](const std::vector<int>& matching) {
    MatchingInfo info(matching);
    table.codes += limit;
    for (std::uint32_t word = 0; word < limit; word += root_leaf ? 2 : 1) {
      for (int p = 0; p < n; ++p) bits[p] = (word >> p) & 1u;
      SideEnds ends = info.ends(bits);
      QuickStats q = quick_stats(n, ends, word == 0);
      if (!passes(opt.filter, q)) continue;
      ++table.counts[{q.twice_h, q.orientable}];
      if (!opt.classify && !opt.dump && !opt.dominance) continue;
      RibbonMap map = decode_ends(n, ends);
      if (opt.classify) {
        RibbonMap c = canonical_orientation(map);
        Classification cl = classify(c);
        ++table.classified;
        ++table.tau_histogram[cl.tau];
        table.tau_sum += static_cast<std::uint64_t>(cl.tau);
        for (int f = 0; f < 4; ++f) table.flavor_counts[f] += static_cast<std::uint64_t>(cl.flavor_counts[f]);
      }
      if (opt.dominance && q.twice_h > 0) {
        ++table.with_cycles;
        if (core_scheme(map).dominant) ++table.dominant;
      }
      if (opt.dump) table.witnesses.push_back(serialize(map));
    }
  });
}

}  // namespace

RibbonMap decode(const GluingCode& code) {
  if (!is_valid(code)) throw Error(ErrorKind::invalid_argument, "malformed gluing code");
  const int n = code.num_edges();
  if (n > kMaxEdgeCap) throw Error(ErrorKind::size_over_cap, "gluing code too large");
  MatchingInfo info(code.matching);
  return decode_ends(n, info.ends(code.twist_bits));
}

void for_each_code(int n, const std::function<void(const GluingCode&)>& f) {
  GluingCode code;
  code.twist_bits.assign(n, 0);
  for_each_matching(n, -1, [&](const std::vector<int>& matching) {
    code.matching = matching;
    for (std::uint32_t word = 0; word < (1u << n); ++word) {
      for (int p = 0; p < n; ++p) code.twist_bits[p] = (word >> p) & 1u;
      f(code);
    }
  });
}

void CountTable::merge(const CountTable& other) {
  codes += other.codes;
  for (const auto& [k, c] : other.counts) counts[k] += c;
  classified += other.classified;
  for (const auto& [k, c] : other.tau_histogram) tau_histogram[k] += c;
  for (int f = 0; f < 4; ++f) flavor_counts[f] += other.flavor_counts[f];
  tau_sum += other.tau_sum;
  dominant += other.dominant;
  with_cycles += other.with_cycles;
  witnesses.insert(witnesses.end(), other.witnesses.begin(), other.witnesses.end());
}

std::uint64_t CountTable::total() const {
  std::uint64_t t = 0;
  for (const auto& [k, c] : counts) t += c;
  return t;
}

std::uint64_t CountTable::orientable_total() const {
  std::uint64_t t = 0;
  for (const auto& [k, c] : counts) {
    if (k.second) t += c;
  }
  return t;
}

std::string CountTable::to_tsv() const {
  std::ostringstream out;
  for (const auto& [k, c] : counts) out << k.first << '\t' << (k.second ? 1 : 0) << '\t' << c << '\n';
  return out.str();
}

std::string CountTable::to_ndjson() const {
  std::ostringstream out;
  for (const auto& [k, c] : counts) {
    nlohmann::json row{{"n", n}, {"twice_h", k.first}, {"orientable", k.second}, {"count", c}};
    out << row.dump() << '\n';
  }
  nlohmann::json dist{{"n", n}, {"codes", codes}, {"total", total()}};
  if (classified > 0) {
    nlohmann::json hist = nlohmann::json::object();
    for (const auto& [t, c] : tau_histogram) hist[std::to_string(t)] = c;
    dist["classified"] = classified;
    dist["tau_histogram"] = hist;
    dist["tau_sum"] = tau_sum;
    dist["flavors"] = {{"A", flavor_counts[0]}, {"B", flavor_counts[1]}, {"C", flavor_counts[2]}, {"D", flavor_counts[3]}};
  }
  if (with_cycles > 0) {
    dist["with_cycles"] = with_cycles;
    dist["dominant"] = dominant;
  }
  out << dist.dump() << '\n';
  return out.str();
}

int resolve_edge_cap(std::optional<int> flag) {
  int cap = kDefaultEdgeCap;
  if (flag) {
    cap = *flag;
  } else if (const char* env = std::getenv("UMAP_MAX_EDGES"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (*end != '\0') throw Error(ErrorKind::invalid_argument, "UMAP_MAX_EDGES is not an integer");
    cap = static_cast<int>(v);
  }
  if (cap < 1 || cap > kMaxEdgeCap) {
    throw Error(ErrorKind::invalid_argument, "edge cap must lie in 1.." + std::to_string(kMaxEdgeCap));
  }
  return cap;
}

CountTable enumerate(int n, const EnumerateOptions& options) {
  check_size(n, options.edge_cap);
  const int branches = 2 * n - 1;
  std::vector<CountTable> parts(branches);
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int b = next++; b < branches; b = next++) run_branch(n, b + 1, options, parts[b]);
  };
  const int jobs = std::clamp(options.jobs, 1, branches);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }
  CountTable table;
  table.n = n;
  for (const auto& part : parts) table.merge(part);
  return table;
}

void for_each_map(int n, const CensusFilter& filter, int edge_cap, const std::function<void(const RibbonMap&)>& f) {
  check_size(n, edge_cap);
  const bool root_leaf = needs_root_leaf(filter);
  std::vector<std::uint8_t> bits(n);
  for_each_matching(n, root_leaf ? 2 * n - 1 : -1, [&](const std::vector<int>& matching) {
    MatchingInfo info(matching);
    for (std::uint32_t word = 0; word < (1u << n); word += root_leaf ? 2 : 1) {
      for (int p = 0; p < n; ++p) bits[p] = (word >> p) & 1u;
      SideEnds ends = info.ends(bits);
      if (!passes(filter, quick_stats(n, ends, word == 0))) continue;
      f(decode_ends(n, ends));
    }
  });
}

int precubic_edges(int twice_h, int m) { return 2 * m + (twice_h % 2 == 0 ? 1 : 0); }

namespace {

CensusFilter precubic_filter(HalfType type) {
  if (type.orientable && type.twice_h % 2 != 0) {
    throw Error(ErrorKind::invalid_argument, "orientable maps have integer type");
  }
  CensusFilter f;
  f.precubic = true;
  f.orientable = type.orientable ? Tristate::yes : Tristate::no;
  f.twice_h = std::set<int>{type.twice_h};
  return f;
}

}  // namespace

CountTable precubic_census(HalfType type, int m, int jobs, int edge_cap) {
  EnumerateOptions opt;
  opt.filter = precubic_filter(type);
  opt.jobs = jobs;
  opt.edge_cap = edge_cap;
  opt.classify = true;
  opt.dominance = type.twice_h > 0;
  return enumerate(precubic_edges(type.twice_h, m), opt);
}

std::vector<RibbonMap> precubic_maps(HalfType type, int m, int edge_cap) {
  std::vector<RibbonMap> out;
  for_each_map(precubic_edges(type.twice_h, m), precubic_filter(type), edge_cap,
               [&](const RibbonMap& map) { out.push_back(canonical_orientation(map)); });
  return out;
}

}  // namespace umap
