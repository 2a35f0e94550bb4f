#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "uberhom/coloured.hpp"
#include "uberhom/complex.hpp"
#include "uberhom/error.hpp"
#include "uberhom/graph.hpp"
#include "uberhom/morse.hpp"
#include "uberhom/plane.hpp"
#include "uberhom/uber.hpp"

namespace py = pybind11;
using namespace uberhom;

namespace {

Colouring colouring_arg(const SimplicialComplex& x, const std::string& bits) {
  const auto c = Colouring::parse(bits);
  check_lengths(x, c);
  return c;
}

py::dict bigraded(const BigradedRanks& ranks) {
  py::dict out;
  for (const auto& [g, r] : ranks)
    if (r != 0) out[py::make_tuple(g.first, g.second)] = r;
  return out;
}

py::dict trigraded(const TriGradedRanks& ranks) {
  py::dict out;
  for (const auto& [g, r] : ranks)
    if (r != 0) out[py::make_tuple(std::get<0>(g), std::get<1>(g), std::get<2>(g))] = r;
  return out;
}

ThetaMode mode_arg(const std::string& mode) {
  if (mode == "aggregated") return ThetaMode::aggregated;
  if (mode == "per-colouring" || mode == "per_colouring") return ThetaMode::per_colouring;
  fail(ErrorKind::invalid_argument, "mode must be 'aggregated' or 'per-colouring'");
}

}  // namespace

PYBIND11_MODULE(_uberhom, m) {
  m.doc() = "Bi-coloured filtered homology and überhomology over F2";

  static py::exception<Error> error(m, "UberhomError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::resource_cap)
        PyErr_SetString(PyExc_MemoryError, e.what());
      else
        py::set_error(error, e.what());
    }
  });

  py::class_<SimplicialComplex>(m, "SimplicialComplex")
      .def_static("from_facets", &SimplicialComplex::from_facets, py::arg("m"), py::arg("facets"))
      .def_static("parse", [](const std::string& text) { return parse_facet_text(text); })
      .def_static(
          "standard",
          [](const std::string& name, const std::vector<std::size_t>& params) { return standard_complex(name, params); },
          py::arg("name"), py::arg("params") = std::vector<std::size_t>{})
      .def_property_readonly("vertex_count", &SimplicialComplex::vertex_count)
      .def_property_readonly("dim", &SimplicialComplex::dim)
      .def("f_vector", &SimplicialComplex::f_vector)
      .def("facets",
           [](const SimplicialComplex& x) {
             std::vector<std::vector<std::size_t>> out;
             for (Simplex s : x.facets()) out.push_back(simplex_vertices(s));
             return out;
           })
      .def("to_text", [](const SimplicialComplex& x) { return to_facet_text(x); })
      .def("__repr__", [](const SimplicialComplex& x) {
        return "<SimplicialComplex on " + std::to_string(x.vertex_count()) + " vertices, dim " +
               std::to_string(x.dim()) + ">";
      });

  m.def("homology_ranks", [](const SimplicialComplex& x) {
    auto h = homology_ranks(x);
    while (!h.empty() && h.back() == 0) h.pop_back();
    return h;
  });
  m.def("horizontal_homology",
        [](const SimplicialComplex& x, const std::string& c) { return bigraded(horizontal_homology(x, colouring_arg(x, c))); });
  m.def("diagonal_homology",
        [](const SimplicialComplex& x, const std::string& c) { return bigraded(diagonal_homology(x, colouring_arg(x, c))); });
  m.def("filtered_homology", [](const SimplicialComplex& x, const std::string& c, int k) {
    return filtered_homology(x, colouring_arg(x, c), k);
  });
  m.def("graded_euler",
        [](const SimplicialComplex& x, const std::string& c) { return graded_euler(x, colouring_arg(x, c)); });
  m.def("is_dalmatian", [](const SimplicialComplex& x, const std::string& c) { return is_dalmatian(x, colouring_arg(x, c)); });
  m.def("critical_counts", [](const SimplicialComplex& x, const std::string& c) -> py::object {
    const auto r = verify_morse(x, colouring_arg(x, c));
    if (!r.is_morse()) return py::none();
    return py::cast(r.critical_counts());
  });
  m.def(
      "uber_homology",
      [](const SimplicialComplex& x, std::optional<std::size_t> cap, std::size_t jobs) {
        UberOptions o;
        if (cap) o.cap = *cap;
        o.jobs = jobs;
        py::gil_scoped_release release;
        auto ranks = uber_homology(x, o);
        py::gil_scoped_acquire acquire;
        return trigraded(ranks);
      },
      py::arg("x"), py::arg("cap") = py::none(), py::arg("jobs") = 1);
  m.def("uber_degree0", [](const SimplicialComplex& x) { return bigraded(uber_degree0_fast(x)); });

  py::class_<SimpleGraph>(m, "Graph")
      .def_static("from_graph6", [](const std::string& text) { return parse_graph6(text); })
      .def_static("from_edges",
                  [](std::size_t n, const std::vector<Edge>& edges) { return SimpleGraph::from_edges(n, edges); })
      .def_static(
          "standard",
          [](const std::string& name, const std::vector<std::size_t>& params) { return standard_graph(name, params); },
          py::arg("name"), py::arg("params") = std::vector<std::size_t>{})
      .def_property_readonly("vertex_count", &SimpleGraph::vertex_count)
      .def("edges", &SimpleGraph::edges)
      .def("relabel", [](const SimpleGraph& g, const std::vector<std::size_t>& p) { return g.relabel(p); })
      .def("to_graph6", [](const SimpleGraph& g) { return to_graph6(g); })
      .def("__eq__", [](const SimpleGraph& a, const SimpleGraph& b) { return a == b; })
      .def("__repr__", [](const SimpleGraph& g) { return "<Graph " + to_graph6(g) + ">"; });

  m.def(
      "theta",
      [](const SimpleGraph& g, int j, const std::string& mode) {
        std::vector<std::tuple<int, int, int, std::size_t>> out;
        for (const auto& t : theta(g, j, mode_arg(mode)).tuples) out.emplace_back(t.j, t.i, t.k, t.r);
        return out;
      },
      py::arg("g"), py::arg("j"), py::arg("mode") = "aggregated");
  m.def(
      "dissimilarity",
      [](const SimpleGraph& a, const SimpleGraph& b, const std::string& mode) -> py::object {
        const auto d = dissimilarity(a, b, mode_arg(mode));
        if (d.infinite) return py::float_(std::numeric_limits<double>::infinity());
        auto fractions = py::module_::import("fractions");
        return fractions.attr("Fraction")(d.numerator, d.denominator);
      },
      py::arg("a"), py::arg("b"), py::arg("mode") = "per-colouring");
  m.def("h0", [](const SimpleGraph& g) { return h0_graph(g); });
  m.def("h1_0", [](const SimpleGraph& g) { return h1_0(g); });
  m.def("h1_1", [](const SimpleGraph& g) { return h1_1(g); });
  m.def("h2", [](const SimpleGraph& g) { return h2_graph(g); });
  m.def("matching_complex", [](const SimpleGraph& g) { return matching_complex(g); });

  py::class_<PlaneGraph>(m, "PlaneGraph")
      .def_static("parse", [](const std::string& text) { return PlaneGraph::parse(text); })
      .def_static("from_rotation", &PlaneGraph::from_rotation)
      .def_static("cycle", &plane_cycle)
      .def_static("wheel", &plane_wheel)
      .def_property_readonly("vertex_count", &PlaneGraph::vertex_count)
      .def_property_readonly("edge_count", &PlaneGraph::edge_count)
      .def_property_readonly("face_count", &PlaneGraph::face_count)
      .def("dual", [](const PlaneGraph& g) { return dual_graph(g); });

  m.def("verify_tait_decomposition", [](const PlaneGraph& g) {
    const auto r = verify_tait_decomposition(g);
    py::dict out;
    out["lhs"] = bigraded(r.lhs);
    out["rhs"] = bigraded(r.rhs);
    out["weight_zero"] = r.level0;
    out["subdivision_homology"] = r.subdivision_homology;
    out["decomposition_ok"] = r.decomposition_ok();
    out["weight_zero_ok"] = r.level0_ok();
    out["full_filtration_ok"] = r.top_ok();
    out["ok"] = r.ok();
    return out;
  });
}
