// Acceptance run: one line per criterion, exit status 1 if any fails.
#include <chrono>
#include <cstdint>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "umap/bijections.hpp"
#include "umap/enumeration.hpp"
#include "umap/formulas.hpp"
#include "umap/unicellular.hpp"

using namespace umap;

namespace {

struct Outcome {
  bool passed = false;
  std::string detail;
};

std::uint64_t odd_double_factorial(int n) {
  std::uint64_t r = 1;
  for (int k = n; k > 1; k -= 2) r *= static_cast<std::uint64_t>(k);
  return r;
}

std::uint64_t choose(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::uint64_t catalan_number(int m) { return choose(2 * m, m) / (m + 1); }

/// Precubic maps of one class, canonically oriented, read straight off the
/// enumerator with its own filter checks.
std::vector<RibbonMap> census(int n, int twice_h, bool orientable) {
  CensusFilter f;
  f.precubic = true;
  f.twice_h = std::set<int>{twice_h};
  f.orientable = orientable ? Tristate::yes : Tristate::no;
  std::vector<RibbonMap> out;
  for_each_map(n, f, n, [&](const RibbonMap& m) {
    if (is_precubic(m) && euler_type(m) == HalfType{twice_h, orientable}) out.push_back(canonical_orientation(m));
  });
  return out;
}

std::string histogram_string(const std::map<int, std::uint64_t>& h) {
  std::ostringstream s;
  s << '{';
  bool first = true;
  for (const auto& [k, v] : h) {
    s << (first ? "" : ", ") << k << ':' << v;
    first = false;
  }
  s << '}';
  return s.str();
}

Outcome klein_census() {
  std::map<int, std::uint64_t> hist;
  auto maps = census(5, 2, false);
  for (const auto& m : maps) ++hist[classify(m).tau];
  const std::map<int, std::uint64_t> expected{{0, 3}, {2, 3}};
  return {maps.size() == 6 && hist == expected,
          std::to_string(maps.size()) + " maps (expected 6), tau histogram " + histogram_string(hist) +
              " (expected {0:3, 2:3})"};
}

Outcome projective_powers(int cap) {
  std::ostringstream d;
  bool ok = true;
  std::uint64_t expected = 1;
  for (int m = 1; m <= 4; ++m, expected *= 4) {
    if (2 * m > cap) {
      d << "; m=" << m << " skipped (cap " << cap << ")";
      continue;
    }
    const std::uint64_t got = census(2 * m, 1, false).size();
    ok = ok && got == expected;
    d << (m == 1 ? "" : ", ") << "m=" << m << ": " << got << " (expected " << expected << ")";
  }
  return {ok, d.str()};
}

Outcome eta_one_three() {
  const std::uint64_t got = census(7, 2, false).size();
  const BigCount closed = eta({2}, 3);
  const bool c_ok = c_const(1) == 3;
  return {got == 60 && closed == 60 && c_ok,
          "enumerated " + std::to_string(got) + ", closed form " + closed.str() + ", c_1 = " + c_const(1).str()};
}

Outcome orientable_formula() {
  const std::uint64_t a = census(5, 2, true).size();
  const std::uint64_t b = census(7, 2, true).size();
  return {a == 1 && b == 10 && xi(1, 2) == 1 && xi(1, 3) == 10,
          "xi_1(2): " + std::to_string(a) + " (expected 1), xi_1(3): " + std::to_string(b) + " (expected 10)"};
}

Outcome trisection() {
  std::uint64_t maps = 0, violations = 0;
  CensusFilter f;
  f.precubic = true;
  for (int n = 1; n <= 6; ++n) {
    for_each_map(n, f, n, [&](const RibbonMap& raw) {
      RibbonMap m = canonical_orientation(raw);
      Classification cl = classify(m);
      ++maps;
      if (cl.tau != euler_type(m).twice_h + cl.t_rl - cl.t_lr) ++violations;
    });
  }
  return {violations == 0 && maps > 0, std::to_string(maps) + " maps, " + std::to_string(violations) + " violations"};
}

Outcome averaging() {
  std::ostringstream d;
  bool ok = true;
  for (auto [n, expected_sum] : {std::pair{5, 6}, std::pair{7, 60}}) {
    auto maps = census(n, 2, false);
    std::set<std::string> keys, images;
    int sum = 0;
    std::uint64_t bad = 0;
    for (const auto& m : maps) {
      keys.insert(rooted_key(m));
      const int t = classify(m).tau;
      sum += t;
      RibbonMap y = phi(m);
      images.insert(rooted_key(y));
      if (t + classify(y).tau != 2) ++bad;
      if (phi_inverse(y) != m) ++bad;
      if (averaging_involution(averaging_involution(m)) != m) ++bad;
    }
    const bool bijective = images == keys && images.size() == maps.size();
    ok = ok && sum == expected_sum && bijective && bad == 0;
    d << (n == 5 ? "" : "; ") << "N_1(" << (n - 1) / 2 << "): sum tau " << sum << " (expected " << expected_sum
      << "), phi bijective " << (bijective ? "yes" : "no") << ", " << bad << " violations";
  }
  return {ok, d.str()};
}

Outcome opening() {
  std::ostringstream d;
  bool ok = true;
  for (int m : {2, 3}) {
    std::uint64_t marked = 0, bad = 0;
    for (const auto& x : census(2 * m + 1, 2, false)) {
      Classification cl = classify(x);
      for (VertexId v = 0; v < x.num_vertices(); ++v) {
        if (!cl.nodes[v] || !cl.nodes[v]->intertwined) continue;
        ++marked;
        Opening o = open(x, v);
        RibbonMap back = glue(o.triple, o.flavor);
        const Classification bc = classify(back);
        const auto& node = bc.nodes[back.vertex_of(o.triple.leaf_half_edges()[0])];
        if (!flip_equivalent(back, x) || !node || node->flavor != cl.nodes[v]->flavor) ++bad;
      }
    }
    // type 0 non-orientable maps do not exist and xi_0 = Catalan, with l = m + 1
    const std::uint64_t expected = 3 * choose(m + 1, 3) * catalan_number(m);
    ok = ok && marked == expected && bad == 0;
    d << (m == 2 ? "" : "; ") << "n=" << 2 * m + 1 << ": " << marked << " marked maps (expected " << expected << "), "
      << bad << " round-trip failures";
  }
  return {ok, d.str()};
}

Outcome sigma_parity() {
  std::uint64_t maps = 0, violations = 0;
  CensusFilter f;
  f.precubic = true;
  f.orientable = Tristate::no;
  for (int n = 1; n <= 6; ++n) {
    for_each_map(n, f, n, [&](const RibbonMap& raw) {
      BudSystem b = bud_system(canonical_orientation(raw));
      ++maps;
      for (std::size_t i = 0; i < b.sigma.size(); i += 2) {
        if (b.sigma[i] % 2 != 0) {
          ++violations;
          break;
        }
      }
    });
  }
  return {violations == 0 && maps > 0, std::to_string(maps) + " maps, " + std::to_string(violations) + " violations"};
}

Outcome oracle_totals() {
  std::ostringstream d;
  bool ok = true;
  for (int n = 1; n <= 6; ++n) {
    std::uint64_t total = 0, orientable = 0;
    for_each_code(n, [&](const GluingCode& c) {
      RibbonMap m = decode(c);
      ++total;
      orientable += is_orientable(m);
    });
    const std::uint64_t df = odd_double_factorial(2 * n - 1);
    ok = ok && orientable == df && total == (df << n);
    d << (n == 1 ? "" : ", ") << "n=" << n << ": " << orientable << '/' << total;
  }
  return {ok, d.str() + " (orientable/total)"};
}

Outcome exact_sweeps() {
  int failures = 0;
  for (int t = 1; t <= 8; ++t) {
    for (int m = 0; m <= 30; ++m) {
      if (t >= 2 && !recursion_check({t}, m)) ++failures;
      if (m >= 1 && !remy_recursion_check({t}, m)) ++failures;
    }
  }
  for (int h = 1; h <= 10; ++h) failures += c_const(h) != c_const_recurrence(h);
  return {failures == 0, std::to_string(failures) + " failures over 2h <= 8, m <= 30 and c_h for h <= 10"};
}

Outcome remy() {
  std::ostringstream d;
  bool ok = true;
  std::map<int, std::uint64_t> sizes;
  for (int m = 1; m <= 3; ++m) sizes[m] = census(2 * m, 1, false).size();
  std::uint64_t choices = 0, bad = 0;
  for (int m = 2; m <= 3; ++m) {
    std::uint64_t here = 0;
    for (const auto& x : census(2 * m, 1, false)) {
      for (VertexId v = 0; v < x.num_vertices(); ++v) {
        if (x.degree(v) != 1 || v == x.root_vertex()) continue;
        ++here;
        RemyDeletion del = remy_delete(x, v);
        if (rooted_key(remy_insert(del.map, del.marker)) != rooted_key(x)) ++bad;
      }
    }
    choices += here;
    // each map of N(m) has m - 1 non-root leaves
    const std::uint64_t expected = 4 * static_cast<std::uint64_t>(m - 1) * sizes[m - 1];
    ok = ok && here == expected;
    d << "m=" << m - 1 << ": " << here << " marked deletions (expected 4m|N(m)| = " << expected << "); ";
  }
  ok = ok && bad == 0;
  d << bad << " round-trip failures over " << choices << " choices";
  return {ok, d.str()};
}

}  // namespace

int main() {
  const int cap = resolve_edge_cap(std::nullopt);
  struct Criterion {
    int id;
    std::string name;
    double seconds_limit;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "Klein-bottle census", 1.0, klein_census},
      {2, "projective powers", 600.0, [cap] { return projective_powers(cap); }},
      {3, "closed form eta_1(3) against enumeration", 30.0, eta_one_three},
      {4, "orientable formula cross-check", 30.0, orientable_formula},
      {5, "trisection identity", 60.0, trisection},
      {6, "averaging", 60.0, averaging},
      {7, "opening/gluing round trip", 60.0, opening},
      {8, "sigma parity", 60.0, sigma_parity},
      {9, "oracle totals", 60.0, oracle_totals},
      {10, "exact-arithmetic sweeps", 60.0, exact_sweeps},
      {11, "Remy bijection", 60.0, remy},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = seconds <= c.seconds_limit;
    const bool passed = o.passed && in_time;
    if (!passed) ++failed;
    std::cout << (passed ? "PASS" : "FAIL") << "  criterion " << c.id << " (" << c.name << "): " << o.detail << " ["
              << std::fixed << std::setprecision(2) << seconds << " s, limit " << c.seconds_limit << " s]\n";
  }
  std::cout << (criteria.size() - failed) << '/' << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
