// Python bindings: closed forms, solvers, disk distance, the quadrature
// planner and the construction runner. Records cross as dicts.

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "hypkit/constructions.hpp"
#include "hypkit/core_trig.hpp"
#include "hypkit/disk.hpp"
#include "hypkit/error.hpp"
#include "hypkit/quadrature.hpp"
#include "hypkit/script_io.hpp"
#include "hypkit/svg.hpp"
#include "hypkit/triangles.hpp"
#include "hypkit/verify.hpp"

namespace py = pybind11;
using namespace hypkit;

namespace {

template <class T>
std::optional<T> opt(const std::optional<double>& v) {
  return v ? std::optional<T>(T(*v)) : std::nullopt;
}

py::dict right_dict(const RightTriangle& t) {
  py::dict d;
  d["a"] = t.a.value();
  d["b"] = t.b.value();
  d["c"] = t.c.value();
  d["alpha"] = t.alpha.radians();
  d["beta"] = t.beta.radians();
  d["defect"] = t.defect();
  d["area"] = t.area();
  return d;
}

py::dict general_dict(const GeneralTriangle& t) {
  py::dict d;
  d["a"] = t.a.value();
  d["b"] = t.b.value();
  d["c"] = t.c.value();
  d["A"] = t.A.radians();
  d["B"] = t.B.radians();
  d["C"] = t.C.radians();
  d["defect"] = t.defect();
  d["area"] = t.area();
  return d;
}

py::dict plan_dict(const QuadraturePlan& p) {
  py::dict d;
  d["tan2z"] = p.tan2z.str();
  d["admissible"] = p.admissible;
  d["planned"] = p.outcome == PlanOutcome::planned;
  d["certificate"] = p.certificate;
  d["target_area"] = p.target_area_over_k2;
  if (p.outcome == PlanOutcome::planned) {
    d["n"] = p.n;
    d["v_over_pi"] = p.v_over_pi.str();
    d["v"] = p.v().radians();
  }
  return d;
}

py::list report_list(const Report& report) {
  py::list out;
  for (const AssertionResult& r : report.results) {
    py::dict d;
    d["label"] = r.label;
    d["expected"] = r.expected;
    d["measured"] = r.measured;
    d["residual"] = r.residual;
    d["tol"] = r.tol;
    d["passed"] = r.passed;
    d["note"] = r.note;
    out.append(d);
  }
  return out;
}

py::dict construction_dict(const Construction& c) {
  py::dict d;
  d["passed"] = c.report.passed();
  d["assertions"] = report_list(c.report);
  d["script"] = dump_script(c.script);
  d["svg"] = render_svg(c.state);
  return d;
}

}  // namespace

PYBIND11_MODULE(_hypkit, m) {
  m.doc() = "Hyperbolic geometry kernel";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<OutOfRangeError>(m, "OutOfRangeError", PyExc_OverflowError);
  py::register_exception<ScriptFormatError>(m, "ScriptFormatError", PyExc_ValueError);
  py::register_exception<ConstructionError>(m, "ConstructionError", PyExc_RuntimeError);

  const auto k_arg = py::arg("k") = 1.0;

  m.def("arc_ratio", [](double x, double k) { return arc_ratio(Length(x), Curvature(k)).value(); }, py::arg("x"), k_arg);
  m.def("angle_of_parallelism", [](double y, double k) { return angle_of_parallelism(Length(y), Curvature(k)).radians(); },
        py::arg("y"), k_arg);
  m.def("parallelism_segment", [](double u, double k) { return parallelism_segment(Angle(u), Curvature(k)).value(); },
        py::arg("u"), k_arg);
  m.def("circle_circumference", [](double r, double k) { return circle_circumference(Length(r), Curvature(k)).value(); },
        py::arg("r"), k_arg);
  m.def("circle_area", [](double r, double k) { return circle_area(Length(r), Curvature(k)).value(); }, py::arg("r"),
        k_arg);
  m.def("equidistant_arc_length",
        [](double a, double b, double k) { return equidistant_arc_length(Length(a), Length(b), Curvature(k)).value(); },
        py::arg("a"), py::arg("b"), k_arg);
  m.def("horocycle_arc_length", [](double y, double k) { return horocycle_arc_length(Length(y), Curvature(k)).value(); },
        py::arg("y"), k_arg);
  m.def("horocycle_sector_area",
        [](double r, std::optional<double> x, double k) {
          const StripDepth depth = x ? StripDepth{Length(*x)} : StripDepth{unbounded};
          return horocycle_sector_area(Length(r), depth, Curvature(k)).value();
        },
        py::arg("r"), py::arg("x") = py::none(), k_arg, "Strip area; x=None is the unbounded strip.");
  m.def("sphere_measures",
        [](double x, double k) {
          const SphereMeasures s = sphere_measures(Length(x), Curvature(k));
          py::dict d;
          d["great_circle"] = s.great_circle;
          d["surface"] = s.surface;
          d["volume"] = s.volume;
          return d;
        },
        py::arg("x"), k_arg);
  m.def("polygon_area_from_angles",
        [](const std::vector<double>& angles, double k) {
          std::vector<Angle> a(angles.begin(), angles.end());
          return polygon_area_from_angles(a, Curvature(k)).value();
        },
        py::arg("angles"), k_arg);

  m.def("solve_right_triangle",
        [](std::optional<double> a, std::optional<double> b, std::optional<double> c, std::optional<double> alpha,
           std::optional<double> beta, double k) {
          return right_dict(solve_right_triangle(
              {opt<Length>(a), opt<Length>(b), opt<Length>(c), opt<Angle>(alpha), opt<Angle>(beta)}, Curvature(k)));
        },
        py::kw_only(), py::arg("a") = py::none(), py::arg("b") = py::none(), py::arg("c") = py::none(),
        py::arg("alpha") = py::none(), py::arg("beta") = py::none(), k_arg);
  m.def("solve_general_triangle",
        [](std::optional<double> a, std::optional<double> b, std::optional<double> c, std::optional<double> A,
           std::optional<double> B, std::optional<double> C, double k) {
          return general_dict(solve_general_triangle(
              {opt<Length>(a), opt<Length>(b), opt<Length>(c), opt<Angle>(A), opt<Angle>(B), opt<Angle>(C)},
              Curvature(k)));
        },
        py::kw_only(), py::arg("a") = py::none(), py::arg("b") = py::none(), py::arg("c") = py::none(),
        py::arg("A") = py::none(), py::arg("B") = py::none(), py::arg("C") = py::none(), k_arg);

  m.def("disk_distance",
        [](std::complex<double> p, std::complex<double> q) {
          return disk::dist(disk::DiskPoint(p), disk::DiskPoint(q)).value();
        },
        py::arg("p"), py::arg("q"), "Distance between two interior points of the Poincare disk (k = 1).");

  m.def("gauss_constructible", &gauss_constructible, py::arg("n"));
  m.def("admissible_tan2z", [](const std::string& q) { return admissible_tan2z(Rational::parse(q)); }, py::arg("q"));
  m.def("plan", [](const std::string& q) { return plan_dict(plan(Rational::parse(q))); }, py::arg("q"));

  m.def("run_script", [](const std::string& text) { return construction_dict(execute(parse_script(text))); },
        py::arg("text"), "Runs a JSON construction script; returns passed, assertions, script and svg.");
  m.def("golden_scripts",
        [] {
          py::dict d;
          for (const auto& [file, script] : golden_scripts()) d[py::str(file)] = dump_script(script);
          return d;
        });
  m.def("build_quadrature",
        [](const std::string& q) {
          const QuadratureConstruction c = construct_quadrature(Rational::parse(q));
          py::dict d = construction_dict(c.run);
          d["plan"] = plan_dict(c.plan);
          d["polygon_area"] = c.polygon_area;
          d["circle_area"] = c.circle_area;
          return d;
        },
        py::arg("q"));

  m.def("verify",
        [](const std::string& suite, std::uint64_t seed, double k) {
          py::list out;
          for (const verify::Check& c : verify::run_suite(suite, verify::Options{seed, Curvature(k)})) {
            py::dict d;
            d["suite"] = c.suite;
            d["property"] = c.property;
            d["samples"] = c.samples;
            d["max_residual"] = c.max_residual;
            d["tol"] = c.tol;
            d["passed"] = c.passed;
            out.append(d);
          }
          return out;
        },
        py::arg("suite") = "all", py::arg("seed") = 42, k_arg);
}
