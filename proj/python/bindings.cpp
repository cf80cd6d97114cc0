#include "shellmoves/equiv.hpp"
#include "shellmoves/errors.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace shellmoves;

namespace {

std::string snail_form_text(const GaussDiagram& g) {
  const InvariantProfile p = profile(g);
  const long lambda = g.mu() == 2 ? std::get<LinkProfile>(p).lambda : 0;
  return format_snail_form(canonical_form(p), lambda);
}

}  // namespace

PYBIND11_MODULE(_shellmoves, m) {
  m.doc() = "Gauss diagrams of virtual knots and 2-component links up to shell moves";

  static py::exception<Error> error(m, "ShellmovesError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error, e.what());
    }
  });

  py::class_<GaussDiagram>(m, "GaussDiagram")
      .def_property_readonly("mu", &GaussDiagram::mu)
      .def_property_readonly("chord_count", &GaussDiagram::chord_count)
      .def("__str__", [](const GaussDiagram& g) { return serialize(g); })
      .def("canonical_key", [](const GaussDiagram& g) { return canonical_key(g); });

  m.def("parse", [](const std::string& text) { return parse_gauss_code(text); }, py::arg("text"));
  m.def("serialize", &serialize, py::arg("diagram"));
  m.def("profile_json", [](const GaussDiagram& g) { return profile_json(profile(g)); }, py::arg("diagram"));
  m.def("profile_text", [](const GaussDiagram& g) { return format_profile(profile(g)); }, py::arg("diagram"));
  m.def("snail_form", &snail_form_text, py::arg("diagram"));
  m.def(
      "s_equivalent",
      [](const GaussDiagram& a, const GaussDiagram& b) {
        const Verdict v = s_equivalent(a, b);
        return py::make_tuple(v.equivalent, v.reason);
      },
      py::arg("a"), py::arg("b"));
  m.def("realize_knot", [](const std::string& w) { return realize_knot(LaurentPoly::parse(w)); }, py::arg("writhe_poly"));
  m.def(
      "realize_link",
      [](long lambda, const Coeffs& a, const Coeffs& b, const Coeffs& c, const Coeffs& d, std::optional<long> shell) {
        return realize_link(LinkTarget{lambda, a, b, c, d, shell});
      },
      py::arg("lam"), py::arg("a") = Coeffs{}, py::arg("b") = Coeffs{}, py::arg("c") = Coeffs{},
      py::arg("d") = Coeffs{}, py::arg("shell_sum") = py::none());
  m.def(
      "random_walk",
      [](const GaussDiagram& g, int steps, std::uint64_t seed, std::size_t cap) {
        WalkResult w = random_walk(g, steps, seed, cap);
        return py::make_tuple(w.diagram, format_trace(w.trace));
      },
      py::arg("diagram"), py::arg("steps"), py::arg("seed"), py::arg("cap") = 40);
  m.def(
      "replay", [](const GaussDiagram& g, const std::string& trace) { return replay(g, parse_trace(trace)); },
      py::arg("diagram"), py::arg("trace"));
  m.def(
      "witness",
      [](const GaussDiagram& g, const GaussDiagram& h, int depth, std::size_t cap,
         std::size_t budget) -> std::optional<std::string> {
        auto t = bfs_witness(g, h, depth, cap, budget);
        if (!t) return std::nullopt;
        return format_trace(*t);
      },
      py::arg("a"), py::arg("b"), py::arg("depth") = 6, py::arg("cap") = 8, py::arg("budget") = 200000);
}
