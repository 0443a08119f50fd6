#include <doctest.h>

#include <map>
#include <set>

#include "umap/enumeration.hpp"
#include "umap/error.hpp"
#include "umap/unicellular.hpp"

using namespace umap;

namespace {

RibbonMap path2() { return RibbonMap({{0, 1}, {2, 3}}, {{0}, {1, 2}, {3}}, {}, {0, 0}); }

RibbonMap twisted_loop() { return RibbonMap({{0, 1}}, {{0, 1}}, {0}, {0, 0}); }

// root leaf joined to a node carrying a twisted loop
RibbonMap projective2() { return RibbonMap({{0, 1}, {2, 3}}, {{0}, {1, 2, 3}}, {1}, {0, 0}); }

std::vector<RibbonMap> canonical_census(int n) {
  CensusFilter f;
  f.precubic = true;
  std::vector<RibbonMap> out;
  for_each_map(n, f, 7, [&](const RibbonMap& m) { out.push_back(canonical_orientation(m)); });
  return out;
}

int left_corners(const Tour& t, VertexId v) {
  int k = 0;
  for (const auto& c : t.corners) k += c.vertex == v && c.side == Side::left;
  return k;
}

}  // namespace

TEST_CASE("tour of a plane path rooted at a leaf") {
  Tour t = tour(path2());
  REQUIRE(t.corners.size() == 4);
  for (const auto& c : t.corners) CHECK(c.side == Side::left);
  CHECK(t.corners[0].label == 1);
  CHECK(t.corners[0].vertex == 0);
}

TEST_CASE("tour of a twisted loop") {
  Tour t = tour(twisted_loop());
  REQUIRE(t.corners.size() == 2);
  CHECK(t.corners[0].side != t.corners[1].side);
}

TEST_CASE("tour of the two-edge projective map") {
  Tour t = tour(projective2());
  REQUIRE(t.corners.size() == 4);
  std::set<std::pair<HalfEdge, HalfEdge>> corners;
  for (std::size_t i = 0; i < t.corners.size(); ++i) {
    CHECK(t.corners[i].label == static_cast<int>(i) + 1);
    corners.insert({t.corners[i].first, t.corners[i].second});
    CHECK(t.label_after[t.corners[i].first] == t.corners[i].label);
  }
  CHECK(corners.size() == 4);
  Tour again = tour(projective2());
  for (std::size_t i = 0; i < t.corners.size(); ++i) CHECK(again.corners[i].first == t.corners[i].first);
}

TEST_CASE("tour rejects maps with several faces") {
  RibbonMap plain_loop({{0, 1}}, {{0, 1}}, {}, {0, 0});
  CHECK_THROWS_AS(tour(plain_loop), Error);
  CHECK_FALSE(is_unicellular(plain_loop));
  CHECK(is_unicellular(twisted_loop()));
}

TEST_CASE("canonical orientation") {
  SUBCASE("canonical maps are fixed") {
    RibbonMap c = canonical_orientation(projective2());
    CHECK(canonical_orientation(c) == c);
    CHECK(is_canonical(c));
  }
  SUBCASE("the node ends with at least two left corners from any convention") {
    for (bool f0 : {false, true}) {
      for (bool f1 : {false, true}) {
        RibbonMap m = flip_vertices(projective2(), {f0, f1});
        RibbonMap c = canonical_orientation(m);
        CHECK(flip_equivalent(c, m));
        CHECK(left_corners(tour(c), 1) >= 2);
        CHECK(left_corners(tour(c), 0) == 1);
      }
    }
  }
  SUBCASE("flipping an internal vertex and canonicalizing restores the map") {
    for (const auto& m : canonical_census(5)) {
      for (VertexId v = 0; v < m.num_vertices(); ++v) {
        if (m.degree(v) == 3) CHECK(canonical_orientation(flip_vertex(m, v)) == m);
      }
    }
  }
  SUBCASE("even degrees are refused") {
    try {
      canonical_orientation(path2());
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::canonical_convention_undefined);
    }
  }
}

TEST_CASE("classification of plane binary trees") {
  for (int n = 1; n <= 7; n += 2) {
    for (const auto& m : canonical_census(n)) {
      if (!is_orientable(m) || euler_type(m).twice_h != 0) continue;
      Classification cl = classify(m);
      CHECK(cl.tau == 0);
      CHECK(m.twists().empty());
      CHECK(cl.t_lr + cl.t_rl == 0);
    }
  }
}

TEST_CASE("classification of the two-edge projective map") {
  RibbonMap c = canonical_orientation(projective2());
  Classification cl = classify(c);
  CHECK(cl.tau == 0);
  CHECK(cl.t_lr == 1);
  CHECK(cl.t_rl == 0);
  CHECK(trisection_identity(c));
}

TEST_CASE("the five-edge Klein bottle census") {
  std::map<int, int> hist;
  std::map<std::pair<int, int>, int> twist_classes;
  for (const auto& m : canonical_census(5)) {
    const HalfType t = euler_type(m);
    if (t.twice_h != 2 || t.orientable) continue;
    Classification cl = classify(m);
    ++hist[cl.tau];
    ++twist_classes[{cl.t_lr, cl.t_rl}];
    CHECK(trisection_identity(m));
    if (cl.t_lr == 1 && cl.t_rl == 1) CHECK(cl.tau == 2);
    if (cl.t_lr == 2 && cl.t_rl == 0) CHECK(cl.tau == 0);
  }
  CHECK(hist == std::map<int, int>{{0, 3}, {2, 3}});
  CHECK(twist_classes.count({1, 1}) == 1);
  CHECK(twist_classes.count({2, 0}) == 1);
}

TEST_CASE("classify preconditions") {
  RibbonMap c = canonical_orientation(projective2());
  try {
    classify(flip_vertex(c, 1));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::not_canonical);
  }
  CHECK_THROWS_AS(classify(twisted_loop()), Error);
  CHECK_FALSE(is_precubic(twisted_loop()));
  CHECK(is_precubic(projective2()));
}

TEST_CASE("intertwined nodes carry a flavor") {
  for (const auto& m : canonical_census(5)) {
    Classification cl = classify(m);
    int tau = 0;
    std::array<int, 4> flavors{};
    for (VertexId v = 0; v < m.num_vertices(); ++v) {
      CHECK(cl.nodes[v].has_value() == (m.degree(v) == 3));
      if (cl.nodes[v] && cl.nodes[v]->intertwined) {
        ++tau;
        ++flavors[static_cast<int>(cl.nodes[v]->flavor)];
      }
    }
    CHECK(tau == cl.tau);
    CHECK(flavors == cl.flavor_counts);
    if (is_orientable(m)) CHECK(cl.flavor_counts[0] == cl.tau);
  }
  CHECK(flavor_letter(Flavor::C) == 'C');
  CHECK(parse_flavor('D') == Flavor::D);
  CHECK_FALSE(parse_flavor('E'));
}

TEST_CASE("core and scheme") {
  SUBCASE("twisted loop") {
    CoreScheme cs = core_scheme(twisted_loop());
    CHECK(cs.core.num_edges() == 1);
    CHECK(cs.scheme.num_edges() == 1);
    CHECK(cs.scheme.num_vertices() == 1);
    CHECK_FALSE(cs.dominant);
  }
  SUBCASE("the Klein bottle census is dominant") {
    int seen = 0;
    for (const auto& m : canonical_census(5)) {
      if (euler_type(m) != HalfType{2, false}) continue;
      ++seen;
      CoreScheme cs = core_scheme(m);
      CHECK(cs.dominant);
      CHECK(euler_type(cs.core) == euler_type(m));
      CHECK(euler_type(cs.scheme) == euler_type(m));
      CHECK(is_unicellular(cs.scheme));
      for (VertexId v = 0; v < cs.scheme.num_vertices(); ++v) CHECK(cs.scheme.degree(v) == 3);
    }
    CHECK(seen == 6);
  }
  SUBCASE("trees have no core") {
    try {
      core_scheme(path2());
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::tree_input);
    }
  }
}

TEST_CASE("normal forms identify rooted maps") {
  std::set<std::string> keys;
  std::size_t codes = 0;
  for_each_code(4, [&](const GluingCode& c) {
    RibbonMap m = decode(c);
    keys.insert(rooted_key(m));
    ++codes;
    CHECK(rooted_key(flip_vertex(m, m.num_vertices() - 1)) == rooted_key(m));
  });
  CHECK(keys.size() == codes);
}
