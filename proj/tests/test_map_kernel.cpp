#include <doctest.h>

#include <random>
#include <set>
#include <sstream>

#include "umap/enumeration.hpp"
#include "umap/error.hpp"
#include "umap/map_io.hpp"
#include "umap/ribbon_map.hpp"

using namespace umap;

namespace {

RibbonMap loop(bool twisted) { return RibbonMap({{0, 1}}, {{0, 1}}, twisted ? std::vector<EdgeId>{0} : std::vector<EdgeId>{}, {0, 0}); }

RibbonMap single_edge() { return RibbonMap({{0, 1}}, {{0}, {1}}, {}, {0, 0}); }

// one vertex, two loops interleaved as a b a b
RibbonMap torus() { return RibbonMap({{0, 2}, {1, 3}}, {{0, 1, 2, 3}}, {}, {0, 0}); }

// path u - v - w with the first edge twisted
RibbonMap twisted_path() { return RibbonMap({{0, 1}, {2, 3}}, {{0}, {1, 2}, {3}}, {0}, {0, 0}); }

std::vector<RibbonMap> all_maps(int n) {
  std::vector<RibbonMap> out;
  for_each_code(n, [&](const GluingCode& c) { out.push_back(decode(c)); });
  return out;
}

}  // namespace

TEST_CASE("validate accepts well-formed maps") {
  CHECK_FALSE(validate(loop(false)));
  CHECK_FALSE(validate(loop(true)));
  CHECK_FALSE(validate(torus()));
  CHECK_FALSE(validate(twisted_path()));
}

TEST_CASE("validate names the violated invariant") {
  RibbonMap repeated({{0, 1}, {1, 3}}, {{0, 1, 2, 3}}, {}, {0, 0});
  auto v = validate(repeated);
  REQUIRE(v);
  CHECK(v->kind == Violation::Kind::pairing_not_involution);
  CHECK(v->message.find("pairing not an involution") != std::string::npos);

  RibbonMap disconnected({{0, 1}, {2, 3}}, {{0, 1}, {2, 3}}, {}, {0, 0});
  v = validate(disconnected);
  REQUIRE(v);
  CHECK(v->kind == Violation::Kind::not_connected);
  CHECK(v->message == "graph not connected");

  RibbonMap missing({{0, 1}}, {{0}}, {}, {0, 0});
  v = validate(missing);
  REQUIRE(v);
  CHECK(v->kind == Violation::Kind::rotation_not_partition);

  RibbonMap bad_twist({{0, 1}}, {{0, 1}}, {3}, {0, 0});
  CHECK(validate(bad_twist)->kind == Violation::Kind::twist_out_of_range);

  RibbonMap bad_root({{0, 1}}, {{0, 1}}, {}, {0, 2});
  CHECK(validate(bad_root)->kind == Violation::Kind::bad_root);
  CHECK_THROWS_AS(require_valid(bad_root), Error);
}

TEST_CASE("face counts of small maps") {
  CHECK(count_faces(loop(false)) == 2);
  CHECK(count_faces(loop(true)) == 1);
  CHECK(count_faces(torus()) == 1);
  CHECK(count_faces(single_edge()) == 1);
}

TEST_CASE("every flag occurs once over all borders") {
  for (int n = 1; n <= 3; ++n) {
    for (const auto& map : all_maps(n)) {
      FaceTrace t = trace_faces(map);
      std::set<Flag> seen;
      std::size_t steps = 0;
      for (const auto& border : t.borders) {
        steps += border.size();
        seen.insert(border.begin(), border.end());
      }
      CHECK(steps == static_cast<std::size_t>(4 * n));
      CHECK(seen.size() == static_cast<std::size_t>(4 * n));
    }
  }
}

TEST_CASE("euler type") {
  CHECK(euler_type(loop(true)) == HalfType{1, false});
  CHECK(euler_type(single_edge()) == HalfType{0, true});
  CHECK(euler_type(torus()) == HalfType{2, true});
  CHECK(euler_type(loop(false)) == HalfType{0, true});
}

TEST_CASE("orientability") {
  CHECK(is_orientable(twisted_path()));
  CHECK_FALSE(is_orientable(loop(true)));
  CHECK(is_orientable(torus()));
  auto flips = orienting_flips(twisted_path());
  REQUIRE(flips);
  CHECK(flip_vertices(twisted_path(), *flips).twists().empty());
}

TEST_CASE("flipping") {
  SUBCASE("one endpoint of a twisted tree edge untwists it") {
    CHECK(flip_vertex(twisted_path(), 0).twists().empty());
  }
  SUBCASE("loops keep their twist status") {
    CHECK(flip_vertex(loop(true), 0).twists() == std::vector<EdgeId>{0});
    CHECK(flip_vertex(loop(false), 0).twists().empty());
  }
  SUBCASE("a leaf keeps its rotation and toggles its edge") {
    RibbonMap f = flip_vertex(single_edge(), 1);
    CHECK(f.rotation(1).size() == 1);
    CHECK(f.rotation(1)[0] == 1);
    CHECK(f.twists() == std::vector<EdgeId>{0});
    CHECK(flip_equivalent(f, single_edge()));
  }
  SUBCASE("rotation is reversed") {
    RibbonMap f = flip_vertex(torus(), 0);
    std::vector<HalfEdge> rot(f.rotation(0).begin(), f.rotation(0).end());
    CHECK(flip_vertex(f, 0) == torus());
    CHECK(rot.size() == 4);
    CHECK(f.next(0) == 3);
  }
  CHECK_THROWS_AS(flip_vertex(torus(), 3), Error);
}

TEST_CASE("flip equivalence") {
  CHECK(flip_equivalent(torus(), flip_vertex(torus(), 0)));
  CHECK_FALSE(flip_equivalent(loop(true), loop(false)));
  RibbonMap untwisted({{0, 1}, {2, 3}}, {{0}, {1, 2}, {3}}, {}, {0, 0});
  CHECK(flip_equivalent(twisted_path(), untwisted));
  RibbonMap other({{0, 1}, {2, 3}}, {{0, 1, 2, 3}}, {}, {0, 0});
  CHECK_THROWS_AS(flip_equivalent(torus(), other), Error);
}

TEST_CASE("faces, type and orientability are flip invariant") {
  std::mt19937 rng(7);
  for (int n = 1; n <= 4; ++n) {
    for (const auto& map : all_maps(n)) {
      const VertexId v = std::uniform_int_distribution<VertexId>(0, map.num_vertices() - 1)(rng);
      RibbonMap f = flip_vertex(map, v);
      CHECK(count_faces(f) == count_faces(map));
      CHECK(euler_type(f) == euler_type(map));
      CHECK(is_orientable(f) == is_orientable(map));
      CHECK(flip_equivalent(map, f));
      CHECK(flip_equivalent(f, map));
      if (is_orientable(map)) {
        CHECK(flip_vertices(map, *orienting_flips(map)).twists().empty());
      }
    }
  }
}

TEST_CASE("flip equivalence is transitive along random flip orbits") {
  std::mt19937 rng(11);
  for (const auto& map : all_maps(3)) {
    std::vector<bool> a(map.num_vertices()), b(map.num_vertices());
    for (int v = 0; v < map.num_vertices(); ++v) {
      a[v] = rng() & 1u;
      b[v] = rng() & 1u;
    }
    RibbonMap x = flip_vertices(map, a);
    RibbonMap y = flip_vertices(x, b);
    CHECK(flip_equivalent(map, x));
    CHECK(flip_equivalent(x, y));
    CHECK(flip_equivalent(map, y));
  }
}

TEST_CASE("serialization") {
  const std::string text =
      "UMAP v1\n"
      "edges: 2\n"
      "pair: 0 2\n"
      "pair: 1 3\n"
      "vertex: 0 1 2 3\n"
      "twists: \n"
      "root: 0 0\n";
  RibbonMap m = parse_map(text);
  CHECK(m == torus());
  CHECK(parse_map(serialize(m)) == m);
  for (const auto& map : all_maps(3)) CHECK(parse_map(serialize(map)) == map);

  SUBCASE("comments and blank lines are ignored") {
    CHECK(parse_map("# hello\n" + text + "\n# leaves: 1 2 3\n") == m);
  }
  SUBCASE("errors carry a line number") {
    std::string broken = text;
    broken.replace(broken.find("pair: 1 3"), 9, "pair: 1 x");
    try {
      parse_map(broken);
      FAIL("expected a parse error");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::parse_error);
      CHECK(std::string(e.what()).find("line 4") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_map("UMAP v1\nedges: 2\npair: 0 1\npair: 2 3\nvertex: 0 1\nvertex: 2 3\ntwists:\nroot: 0 0\n"),
                    Error);
  }
  SUBCASE("streams of documents") {
    std::istringstream in(serialize(torus()) + serialize(loop(true)));
    auto maps = read_maps(in);
    REQUIRE(maps.size() == 2);
    CHECK(maps[1] == loop(true));
  }
}
