#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "thinseq/app/commands.hpp"
#include "thinseq/app/config.hpp"
#include "thinseq/app/report.hpp"
#include "thinseq/app/suites.hpp"
#include "thinseq/carleson.hpp"
#include "thinseq/earl.hpp"
#include "thinseq/errors.hpp"
#include "thinseq/interpolation.hpp"
#include "thinseq/spectral.hpp"

namespace py = pybind11;
using namespace thinseq;

namespace {

BlaschkeSequence make_sequence(const std::string& kind, double q, std::size_t count) {
  return generate_sequence({generator_kind_from_string(kind), q, {}}, count);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Thin interpolating sequences: separation, embedding and interpolation constants";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<NonInterpolatingError>(m, "NonInterpolatingError", PyExc_ArithmeticError);
  py::register_exception<app::ConfigError>(m, "ConfigError", PyExc_ValueError);

  py::class_<GapPoint>(m, "GapPoint")
      .def(py::init<>())
      .def_static("polar", &GapPoint::polar, py::arg("gap"), py::arg("arg"))
      .def_static("from_complex", &GapPoint::from_complex)
      .def_property_readonly("gap", &GapPoint::gap)
      .def_property_readonly("arg", &GapPoint::arg)
      .def_property_readonly("value", &GapPoint::value)
      .def("__repr__", [](const GapPoint& p) {
        return "GapPoint(gap=" + app::format_double(p.gap()) + ", arg=" + app::format_double(p.arg()) + ")";
      });

  py::class_<BlaschkeSequence>(m, "Sequence")
      .def_static("from_points", [](std::vector<GapPoint> pts) { return BlaschkeSequence::from_points(std::move(pts)); })
      .def("__len__", &BlaschkeSequence::size)
      .def("__getitem__", [](const BlaschkeSequence& s, std::size_t n) { return s.at(n); }, "1-based")
      .def_property_readonly("points", &BlaschkeSequence::points)
      .def_property_readonly("description", [](const BlaschkeSequence& s) { return s.generator().describe(); });

  m.def("generate", &make_sequence, py::arg("kind"), py::arg("q") = 0.5, py::arg("count") = 15,
        "kind: radial-geometric | radial-factorial | radial-superexp");
  m.def("pseudo_distance", &pseudo_distance);

  m.def(
      "deltas",
      [](const BlaschkeSequence& s, double tail_tol) {
        std::vector<double> out;
        for (const auto& d : delta_profile(s, s.size(), tail_tol)) out.push_back(d.value);
        return out;
      },
      py::arg("seq"), py::arg("tail_tol") = 1e-6);

  m.def(
      "riesz_bounds",
      [](const BlaschkeSequence& s, std::size_t first, std::size_t last) {
        const auto r = riesz_bounds(KernelFamily::hardy(), s, first, last);
        return py::make_tuple(r.c, r.C);
      },
      py::arg("seq"), py::arg("first"), py::arg("last"));

  m.def(
      "carleson_mu",
      [](const BlaschkeSequence& s, std::size_t first, std::size_t last) {
        const auto b = carleson_constant(DiscreteMeasure::mu(s, first, last), KernelFamily::hardy());
        return py::make_tuple(b.value, b.error_bar);
      },
      py::arg("seq"), py::arg("first"), py::arg("last"), "(value, error bar) of C(mu_N) on [first, last]");

  m.def(
      "eis_constant",
      [](const BlaschkeSequence& s, std::size_t first, std::size_t last) {
        return eis_constant(KernelFamily::hardy(), s, first, last);
      },
      py::arg("seq"), py::arg("first"), py::arg("last"));

  m.def("earl_bound", &earl_bound, py::arg("delta"));

  m.def(
      "min_norm_interpolate",
      [](const BlaschkeSequence& s, std::size_t first, std::size_t last, std::vector<cplx> targets) {
        InterpolationProblem p;
        p.family = KernelFamily::hardy();
        p.seq = s;
        p.first = first;
        p.last = last;
        p.targets = std::move(targets);
        const auto sol = min_norm_interpolant(p);
        return py::make_tuple(std::vector<cplx>(sol.coeffs.begin(), sol.coeffs.end()), sol.norm);
      },
      py::arg("seq"), py::arg("first"), py::arg("last"), py::arg("targets"),
      "(coefficients over normalized kernels, norm)");

  m.def(
      "analyze_csv",
      [](const std::string& yaml) {
        py::gil_scoped_release release;
        return app::to_csv(app::analyze(app::parse_config(yaml)));
      },
      py::arg("config_yaml") = "");

  m.def(
      "verify",
      [](const std::string& yaml) {
        py::gil_scoped_release release;
        const auto results = app::run_suites(app::parse_config(yaml));
        bool ok = true;
        for (const auto& r : results) ok = ok && r.pass();
        return std::make_pair(ok, app::format_suites(results));
      },
      py::arg("config_yaml"), "(all passed, text report)");
}
