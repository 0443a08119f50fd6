#include "umap/map_io.hpp"

#include <charconv>
#include <istream>
#include <sstream>

#include "umap/error.hpp"

namespace umap {

std::string serialize(const RibbonMap& map) {
  std::ostringstream out;
  out << "UMAP v1\n";
  out << "edges: " << map.num_edges() << '\n';
  for (const auto& [a, b] : map.edges()) out << "pair: " << a << ' ' << b << '\n';
  for (VertexId v = 0; v < map.num_vertices(); ++v) {
    out << "vertex:";
    for (HalfEdge h : map.rotation(v)) out << ' ' << h;
    out << '\n';
  }
  out << "twists:";
  for (EdgeId e : map.twists()) out << ' ' << e;
  out << '\n';
  out << "root: " << map.root().half_edge << ' ' << map.root().side << '\n';
  return out.str();
}

namespace {

struct Line {
  int number;
  std::string_view text;
};

[[noreturn]] void fail(int line, const std::string& what) {
  throw Error(ErrorKind::parse_error, "line " + std::to_string(line) + ": " + what);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<int> parse_ints(const Line& line, std::string_view body) {
  std::vector<int> out;
  body = trim(body);
  while (!body.empty()) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), value);
    if (ec != std::errc() || ptr == body.data()) fail(line.number, "expected integer in '" + std::string(line.text) + "'");
    out.push_back(value);
    body.remove_prefix(static_cast<std::size_t>(ptr - body.data()));
    if (!body.empty() && body.front() != ' ' && body.front() != '\t') {
      fail(line.number, "expected integer in '" + std::string(line.text) + "'");
    }
    body = trim(body);
  }
  return out;
}

std::string_view field(const Line& line, std::string_view key) {
  std::string_view t = line.text;
  if (t.substr(0, key.size()) != key || t.size() <= key.size() || t[key.size()] != ':') {
    fail(line.number, "expected '" + std::string(key) + ":'");
  }
  return t.substr(key.size() + 1);
}

bool starts_with(std::string_view t, std::string_view key) {
  return t.substr(0, key.size()) == key && t.size() > key.size() && t[key.size()] == ':';
}

}  // namespace

RibbonMap parse_map(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  while (!text.empty()) {
    ++number;
    auto eol = text.find('\n');
    std::string_view raw = text.substr(0, eol);
    text.remove_prefix(eol == std::string_view::npos ? text.size() : eol + 1);
    std::string_view t = trim(raw);
    if (t.empty() || t.front() == '#') continue;
    lines.push_back({number, t});
  }
  std::size_t i = 0;
  auto expect_line = [&](const char* what) -> const Line& {
    if (i >= lines.size()) fail(number, std::string("unexpected end of document, expected ") + what);
    return lines[i++];
  };

  const Line& header = expect_line("header");
  if (header.text != "UMAP v1") fail(header.number, "expected header 'UMAP v1'");

  const Line& edges_line = expect_line("edges");
  auto count = parse_ints(edges_line, field(edges_line, "edges"));
  if (count.size() != 1 || count[0] < 0) fail(edges_line.number, "edges takes one non-negative integer");
  const int e = count[0];

  std::vector<std::array<HalfEdge, 2>> pairs;
  std::vector<int> pair_lines;
  for (int k = 0; k < e; ++k) {
    const Line& line = expect_line("pair");
    auto ids = parse_ints(line, field(line, "pair"));
    if (ids.size() != 2) fail(line.number, "pair takes two half-edge ids");
    pairs.push_back({ids[0], ids[1]});
    pair_lines.push_back(line.number);
  }

  std::vector<std::vector<HalfEdge>> rotations;
  std::vector<int> vertex_lines;
  while (i < lines.size() && starts_with(lines[i].text, "vertex")) {
    const Line& line = lines[i++];
    rotations.push_back(parse_ints(line, field(line, "vertex")));
    vertex_lines.push_back(line.number);
  }
  if (rotations.empty()) fail(i < lines.size() ? lines[i].number : number, "expected at least one 'vertex:' line");

  const Line& twist_line = expect_line("twists");
  auto twists = parse_ints(twist_line, field(twist_line, "twists"));
  for (int t : twists) {
    if (t < 0 || t >= e) fail(twist_line.number, "twist edge id " + std::to_string(t) + " out of range");
  }

  const Line& root_line = expect_line("root");
  auto root = parse_ints(root_line, field(root_line, "root"));
  if (root.size() != 2) fail(root_line.number, "root takes a half-edge id and a side bit");

  if (i != lines.size()) fail(lines[i].number, "trailing content after root line");

  RibbonMap map(std::move(pairs), rotations, twists, Flag{root[0], root[1]});
  if (auto violation = validate(map)) {
    int line = root_line.number;
    using K = Violation::Kind;
    switch (violation->kind) {
      case K::pairing_not_involution:
        if (violation->index >= 0) line = pair_lines[violation->index];
        break;
      case K::rotation_not_partition:
      case K::not_connected:
        line = violation->index >= 0 ? vertex_lines[violation->index] : vertex_lines.front();
        break;
      case K::twist_out_of_range: line = twist_line.number; break;
      case K::bad_root: line = root_line.number; break;
    }
    fail(line, violation->message);
  }
  return map;
}

std::vector<RibbonMap> read_maps(std::istream& in) {
  std::vector<RibbonMap> maps;
  std::string document;
  std::string line;
  auto flush = [&] {
    if (document.find("UMAP") != std::string::npos) maps.push_back(parse_map(document));
    document.clear();
  };
  while (std::getline(in, line)) {
    if (trim(line) == "UMAP v1") flush();
    document += line;
    document += '\n';
  }
  flush();
  return maps;
}

}  // namespace umap
