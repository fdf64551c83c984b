#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "s1yamabe/conformal.hpp"
#include "s1yamabe/errors.hpp"
#include "s1yamabe/invariants.hpp"
#include "s1yamabe/scaling.hpp"
#include "s1yamabe/version.hpp"
#include "s1yamabe/yamabe.hpp"

namespace py = pybind11;
using namespace s1yamabe;

namespace {

py::tuple fraction(const Rational& r) { return py::make_tuple(r.num, r.den); }

py::dict integral(const IntegralResult& r) {
  py::dict d;
  d["value"] = r.value;
  d["error_estimate"] = r.error_estimate;
  d["refinements_used"] = r.refinements_used;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Invariant Yamabe functionals on circle bundles over surfaces";
  m.attr("__version__") = std::string(kVersion);

  static py::exception<Error> error(m, "Error");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = py::handle(error.ptr())(e.what());
      exc.attr("code") = std::string(to_string(e.code()));
      PyErr_SetObject(error.ptr(), exc.ptr());
    }
  });

  // invariants
  m.def("c1_closed", [](int m1, int m2) { return fraction(c1_closed(m1, m2)); }, py::arg("m1"), py::arg("m2"));
  m.def("chi_closed", [](int m1, int m2) { return fraction(chi_closed(m1, m2)); }, py::arg("m1"), py::arg("m2"));
  m.def("c1_quadrature", [](int m1, int m2) { return integral(c1_quadrature(m1, m2)); }, py::arg("m1"), py::arg("m2"));
  m.def("chi_quadrature", [](int m1, int m2) { return integral(chi_quadrature(m1, m2)); }, py::arg("m1"), py::arg("m2"));
  m.def("chi_boundary", [](int m1, int m2) {
    const LimitResult r = chi_boundary(m1, m2);
    return py::make_tuple(r.value, r.error_estimate);
  }, py::arg("m1"), py::arg("m2"));
  m.def("kappa", &kappa, py::arg("m1"), py::arg("m2"), py::arg("r"));

  // bases and radial data
  py::class_<Base>(m, "Base")
      .def_static("round_sphere", [](double r) { return Base(make_round_sphere(r)); }, py::arg("radius"))
      .def_static("bump_sphere", [](double r, double a) { return Base(make_bump_sphere(r, a)); }, py::arg("radius"),
                  py::arg("amplitude"))
      .def_static("wps", [](int m1, int m2, int grid) { return Base(wps_profile(m1, m2, grid)); }, py::arg("m1"),
                  py::arg("m2"), py::arg("grid") = 256)
      .def_static("flat_torus", [](double l, double r) { return Base(FlatTorusBase(l, r)); }, py::arg("length"),
                  py::arg("radius"))
      .def_property_readonly("length", &Base::length)
      .def_property_readonly("euler_characteristic", &Base::euler_characteristic)
      .def_property_readonly("is_torus", &Base::is_torus)
      .def("phi", &Base::phi, py::arg("s"))
      .def("curvature", &Base::curvature, py::arg("s"))
      .def("area", [](const Base& b) { return area(b); })
      .def("gauss_bonnet", [](const Base& b) { return gauss_bonnet_check(b).value; })
      .def("scaled", &Base::scaled, py::arg("c"))
      .def("__repr__", &Base::describe);

  py::class_<RadialFunction>(m, "RadialFunction")
      .def_static("constant", &RadialFunction::constant, py::arg("value"))
      .def_static("cosine", [](double length, std::vector<double> c) {
        return RadialFunction::cosine(CosineSeries(length, std::move(c)));
      }, py::arg("length"), py::arg("coefficients"), "Σ c_k cos(kπs/length)")
      .def("__call__", &RadialFunction::value, py::arg("s"))
      .def("d1", &RadialFunction::d1, py::arg("s"))
      .def("d2", &RadialFunction::d2, py::arg("s"));

  m.def("wps_curvature_field", &wps_curvature_field, py::arg("m1"), py::arg("m2"), py::arg("grid") = 256);
  m.def("wps_curvature_density", &wps_curvature_density, py::arg("m1"), py::arg("m2"), py::arg("t"));

  py::class_<InvariantMetric>(m, "InvariantMetric")
      .def(py::init([](const Base& b, const RadialFunction& ell, const RadialFunction& F) {
             return InvariantMetric(b, ell, F);
           }),
           py::arg("base"), py::arg("ell"), py::arg("F"))
      .def_property_readonly("base", &InvariantMetric::base)
      .def("scaled", &InvariantMetric::scaled, py::arg("c"));

  m.def("scalar_curvature", &scalar_curvature_total, py::arg("metric"), py::arg("s"));
  m.def("volume", [](const InvariantMetric& g) { return volume_total(g).value; }, py::arg("metric"));
  m.def("omega_norms", [](const InvariantMetric& g) {
    const NormReport n = omega_norms(g);
    py::dict d;
    d["omega_L1"] = n.omega_L1;
    d["omega_L2_sq"] = n.omega_L2_sq;
    d["omega_L3_sq"] = n.omega_L3_sq;
    d["scal_L32"] = n.scal_L32;
    d["chern_number"] = n.chern_number;
    d["error_estimate"] = n.error_estimate;
    d["warning"] = n.warning ? py::cast(*n.warning) : py::none();
    return d;
  }, py::arg("metric"));

  // functionals and bounds
  m.def("sigma_s3", &sigma_s3);
  m.def("sphere_yamabe_constant", &sphere_yamabe_constant, py::arg("n"));
  m.def("functional_J", [](const InvariantMetric& g) {
    const YamabeReport r = functional_J(g);
    py::dict d;
    d["J"] = r.J;
    d["numerator"] = r.numerator;
    d["denominator"] = r.denominator;
    d["J_total_space"] = r.J_total_space;
    d["error_estimate"] = r.error_estimate;
    return d;
  }, py::arg("metric"));
  m.def("functional_J_closed", py::overload_cast<const Base&, const RadialFunction&, double>(&functional_J_closed),
        py::arg("base"), py::arg("F"), py::arg("ell"));
  m.def("conformal_functional", &conformal_functional, py::arg("metric"), py::arg("u"));
  m.def("optimal_ell", [](const Base& b, const RadialFunction& F) {
    const OptimalEll o = optimal_ell(b, F);
    return py::make_tuple(o.ell_star, o.J_max);
  }, py::arg("base"), py::arg("F"));
  m.def("bound_cauchy_schwarz", py::overload_cast<const Base&, const RadialFunction&>(&bound_cauchy_schwarz),
        py::arg("base"), py::arg("F"));
  m.def("bound_theorem_main", &bound_theorem_main, py::arg("chi"), py::arg("c1"));
  m.def("bound_weighted_hopf", &bound_weighted_hopf, py::arg("m1"), py::arg("m2"));
  m.def("hebey_vaugon_bound", &hebey_vaugon_bound, py::arg("n"), py::arg("k") = py::none());

  // conformal
  m.def("laplace_solve_radial", [](const Base& b, const RadialFunction& f, int grid) {
    const LaplaceSolution s = laplace_solve_radial(b, f, grid);
    return py::make_tuple(s.u, s.residual);
  }, py::arg("base"), py::arg("f"), py::arg("grid") = 256);
  m.def("uniformize_positive", [](const Base& b) {
    const Uniformization u = uniformize_positive(b);
    py::dict d;
    d["u"] = u.u;
    d["target"] = u.target;
    d["min_scal"] = u.min_scal;
    d["max_rel_deviation"] = u.max_rel_deviation;
    d["residual"] = u.residual;
    return d;
  }, py::arg("base"));
  m.def("minimize_conformal", [](const InvariantMetric& g, int grid, int max_iterations, double tolerance) {
    MinimizerConfig cfg;
    cfg.grid = grid;
    cfg.max_iterations = max_iterations;
    cfg.tolerance = tolerance;
    const MinimizerResult r = minimize_conformal(g, cfg);
    py::dict d;
    d["mu_upper"] = r.mu_upper;
    d["u_star"] = r.u_star;
    d["trace"] = r.trace;
    d["iterations"] = r.iterations;
    d["converged"] = r.converged;
    return d;
  }, py::arg("metric"), py::arg("grid") = 64, py::arg("max_iterations") = 4000, py::arg("tolerance") = 1e-10);

  // scaling
  m.def("ell_scan", [](const Base& b, const RadialFunction& F, const std::vector<double>& ells) {
    const ScanTable t = ell_scan(b, F, ells);
    py::list rows;
    for (const ScanRow& r : t.rows)
      rows.append(py::make_tuple(r.ell, r.J, r.lower ? py::cast(*r.lower) : py::none(), to_string(r.flag)));
    py::dict d;
    d["rows"] = rows;
    d["regime"] = to_string(t.regime);
    d["exponent"] = t.exponent ? py::cast(*t.exponent) : py::none();
    return d;
  }, py::arg("base"), py::arg("F"), py::arg("ells"));
  m.def("collapse_bounds", [](const Base& b, const RadialFunction& F, double ell) {
    const CollapseBounds c = collapse_bounds(b, F, ell);
    return py::make_tuple(c.lower, c.upper);
  }, py::arg("base"), py::arg("F"), py::arg("ell"));
  m.def("log_grid", &log_grid, py::arg("lo"), py::arg("hi"), py::arg("n"));
}
