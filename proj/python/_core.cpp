#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "umap/bijections.hpp"
#include "umap/enumeration.hpp"
#include "umap/error.hpp"
#include "umap/formulas.hpp"
#include "umap/map_io.hpp"
#include "umap/unicellular.hpp"
#include "umap/verify.hpp"

namespace py = pybind11;
using namespace umap;

namespace {

py::object to_int(const BigCount& v) { return py::module_::import("builtins").attr("int")(v.str()); }

py::object to_fraction(const Rational& v) {
  return py::module_::import("fractions").attr("Fraction")(numerator(v).str() + "/" + denominator(v).str());
}

py::dict classification_dict(const Classification& cl) {
  py::dict d;
  d["tau"] = cl.tau;
  d["t_lr"] = cl.t_lr;
  d["t_rl"] = cl.t_rl;
  d["dsc"] = cl.dsc;
  d["asc"] = cl.asc;
  py::dict flavors;
  for (int f = 0; f < 4; ++f) flavors[py::str(std::string(1, flavor_letter(static_cast<Flavor>(f))))] = cl.flavor_counts[f];
  d["flavors"] = flavors;
  py::dict nodes;
  for (std::size_t v = 0; v < cl.nodes.size(); ++v) {
    if (!cl.nodes[v]) continue;
    nodes[py::int_(v)] = cl.nodes[v]->intertwined ? py::object(py::str(std::string(1, flavor_letter(cl.nodes[v]->flavor))))
                                                  : py::object(py::none());
  }
  d["nodes"] = nodes;
  return d;
}

Flavor flavor_from(const std::string& s) {
  if (s.size() != 1 || !parse_flavor(s[0])) throw Error(ErrorKind::invalid_argument, "flavor must be one of A, B, C, D");
  return *parse_flavor(s[0]);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Unicellular maps on orientable and non-orientable surfaces";

  py::register_exception<Error>(m, "UmapError");

  py::class_<RibbonMap>(m, "RibbonMap")
      .def(py::init([](const std::string& text) { return parse_map(text); }), py::arg("text"))
      .def(py::init([](std::vector<std::array<HalfEdge, 2>> edges, const std::vector<std::vector<HalfEdge>>& rotations,
                       const std::vector<EdgeId>& twists, std::pair<HalfEdge, int> root) {
             RibbonMap map(std::move(edges), rotations, twists, Flag{root.first, root.second});
             require_valid(map);
             return map;
           }),
           py::arg("edges"), py::arg("rotations"), py::arg("twists"), py::arg("root"))
      .def_property_readonly("num_edges", &RibbonMap::num_edges)
      .def_property_readonly("num_vertices", &RibbonMap::num_vertices)
      .def_property_readonly("edges", &RibbonMap::edges)
      .def_property_readonly("twists", &RibbonMap::twists)
      .def_property_readonly("root_vertex", &RibbonMap::root_vertex)
      .def_property_readonly("root", [](const RibbonMap& map) { return std::pair{map.root().half_edge, map.root().side}; })
      .def("rotation", [](const RibbonMap& map, VertexId v) {
        if (v < 0 || v >= map.num_vertices()) throw Error(ErrorKind::unknown_vertex, std::to_string(v));
        return std::vector<HalfEdge>(map.rotation(v).begin(), map.rotation(v).end());
      })
      .def("degree", &RibbonMap::degree)
      .def("serialize", &serialize)
      .def("__str__", &serialize)
      .def("__eq__", [](const RibbonMap& a, const RibbonMap& b) { return a == b; })
      .def("__repr__", [](const RibbonMap& map) {
        return "<RibbonMap edges=" + std::to_string(map.num_edges()) + " vertices=" + std::to_string(map.num_vertices()) +
               ">";
      });

  m.def("parse_map", [](const std::string& text) { return parse_map(text); });
  m.def("serialize", &serialize);
  m.def("count_faces", &count_faces);
  m.def("euler_type", [](const RibbonMap& map) {
    HalfType t = euler_type(map);
    return std::pair{t.twice_h, t.orientable};
  });
  m.def("is_orientable", &is_orientable);
  m.def("is_unicellular", &is_unicellular);
  m.def("is_precubic", &is_precubic);
  m.def("is_canonical", &is_canonical);
  m.def("flip_vertex", &flip_vertex);
  m.def("flip_equivalent", &flip_equivalent);
  m.def("canonical_orientation", &canonical_orientation);
  m.def("classify", [](const RibbonMap& map) { return classification_dict(classify(map)); });
  m.def("rooted_key", &rooted_key);

  m.def(
      "enumerate",
      [](int n, bool precubic, std::optional<bool> orientable, std::optional<std::vector<int>> twice_h, int jobs,
         bool classify_maps, std::optional<int> edge_cap) {
        EnumerateOptions opt;
        opt.filter.precubic = precubic;
        if (orientable) opt.filter.orientable = *orientable ? Tristate::yes : Tristate::no;
        if (twice_h) opt.filter.twice_h = std::set<int>(twice_h->begin(), twice_h->end());
        opt.jobs = jobs;
        opt.classify = classify_maps;
        opt.edge_cap = resolve_edge_cap(edge_cap);
        CountTable t = enumerate(n, opt);
        py::dict counts;
        for (const auto& [k, c] : t.counts) counts[py::make_tuple(k.first, k.second)] = c;
        py::dict out;
        out["codes"] = t.codes;
        out["counts"] = counts;
        if (classify_maps) {
          out["tau_histogram"] = t.tau_histogram;
          out["tau_sum"] = t.tau_sum;
        }
        return out;
      },
      py::arg("n"), py::arg("precubic") = false, py::arg("orientable") = py::none(), py::arg("twice_h") = py::none(),
      py::arg("jobs") = 1, py::arg("classify") = false, py::arg("edge_cap") = py::none());
  m.def(
      "precubic_maps",
      [](int twice_h, bool orientable, int size, std::optional<int> edge_cap) {
        return precubic_maps({twice_h, orientable}, size, resolve_edge_cap(edge_cap));
      },
      py::arg("twice_h"), py::arg("orientable"), py::arg("m"), py::arg("edge_cap") = py::none());

  m.def("eta", [](int twice_h, int size) { return to_int(eta({twice_h}, size)); }, py::arg("twice_h"), py::arg("m"));
  m.def("xi", [](int h, int size) { return to_int(xi(h, size)); }, py::arg("h"), py::arg("m"));
  m.def("marked_count", [](int twice_h, int size) { return to_int(marked_count({twice_h}, size)); }, py::arg("twice_h"),
        py::arg("m"));
  m.def("catalan", [](int size) { return to_int(catalan(size)); });
  m.def("c_const", [](int h) { return to_fraction(c_const(h)); });
  m.def("k_const", [](int twice_h) { return to_fraction(k_const({twice_h})); });
  m.def("recursion_check", [](int twice_h, int size) { return recursion_check({twice_h}, size); });
  m.def("remy_recursion_check", [](int twice_h, int size) { return remy_recursion_check({twice_h}, size); });
  m.def(
      "asymptotic_kappa", [](int twice_h, int n, int digits) { return asymptotic_kappa({twice_h}, n, digits); },
      py::arg("twice_h"), py::arg("n"), py::arg("digits") = 50);

  m.def("open", [](const RibbonMap& map, VertexId v) {
    Opening o = open(map, v);
    return py::make_tuple(o.triple.map, std::vector<VertexId>(o.triple.leaves.begin(), o.triple.leaves.end()),
                          std::string(1, flavor_letter(o.flavor)));
  });
  m.def("glue", [](const RibbonMap& map, std::array<VertexId, 3> leaves, const std::string& flavor) {
    return glue(MarkedTriple{map, leaves}, flavor_from(flavor));
  });
  m.def("phi", &phi);
  m.def("phi_inverse", &phi_inverse);
  m.def("averaging_involution", &averaging_involution);
  m.def("remy_delete", [](const RibbonMap& map, VertexId leaf) {
    RemyDeletion d = remy_delete(map, leaf);
    return py::make_tuple(d.map, py::make_tuple(d.marker.edge, d.marker.side));
  });
  m.def("remy_insert", [](const RibbonMap& map, EdgeId edge, int side) { return remy_insert(map, {edge, side}); });

  m.def(
      "verify",
      [](const std::string& suite, int max_edges) {
        VerifyOptions opt;
        opt.max_edges = max_edges;
        opt.edge_cap = resolve_edge_cap(std::nullopt);
        py::list out;
        for (const auto& r : run_suite(suite, opt)) {
          py::dict d;
          d["suite"] = r.suite;
          d["name"] = r.name;
          d["passed"] = r.passed;
          d["detail"] = r.detail;
          out.append(d);
        }
        return out;
      },
      py::arg("suite") = "all", py::arg("max_edges") = 6);
}
