#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sbound/critline.hpp"
#include "sbound/errors.hpp"
#include "sbound/optimize.hpp"
#include "sbound/sbounds.hpp"
#include "sbound/specfun.hpp"
#include "sbound/verify.hpp"

namespace py = pybind11;
using namespace sbound;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Explicit bounds for S(T): special functions, bound formulas, optimizer, verifier";

  py::register_exception<AccuracyError>(m, "AccuracyError", PyExc_ArithmeticError);
  py::register_exception<NoSignChangeError>(m, "NoSignChangeError", PyExc_ValueError);

  // specfun
  m.def("zeta_real", [](double sigma, double abs_tol) { return zeta_real(sigma, {abs_tol, std::nullopt}); },
        py::arg("sigma"), py::arg("abs_tol") = 1e-12);
  m.def("zeta_complex", [](cplx s, double abs_tol) { return zeta_complex(s, {abs_tol, std::nullopt}); },
        py::arg("s"), py::arg("abs_tol") = 1e-6);
  m.def("log_gamma", &log_gamma, py::arg("z"));
  m.def("theta_rs", &theta_rs, py::arg("t"));
  m.def("z_function", [](double t) { return z_function(t); }, py::arg("t"));

  // critline
  py::enum_<CertKind>(m, "CertKind")
      .value("Convexity", CertKind::Convexity)
      .value("ChengGraham", CertKind::ChengGraham)
      .value("Custom", CertKind::Custom);
  py::class_<CriticalLineBound>(m, "CriticalLineBound")
      .def_property_readonly("kind", &CriticalLineBound::kind)
      .def_property_readonly("theta", &CriticalLineBound::theta)
      .def_property_readonly("B", &CriticalLineBound::prefactor)
      .def_property_readonly("delta", &CriticalLineBound::delta)
      .def_property_readonly("valid_from", &CriticalLineBound::valid_from)
      .def_property_readonly("coefficient_only", &CriticalLineBound::coefficient_only)
      .def("bound_at", &CriticalLineBound::bound_at)
      .def("__repr__", [](const CriticalLineBound& c) { return "<CriticalLineBound " + c.label() + ">"; });
  m.def("cheng_graham_raw", &cheng_graham_raw, py::arg("t"));
  m.def("make_cheng_graham", &make_cheng_graham, py::arg("delta"));
  m.def("make_convexity", &make_convexity);
  m.def("make_custom", &make_custom, py::arg("B"), py::arg("theta"));

  // sbounds
  py::class_<LinearBound>(m, "LinearBound")
      .def_property_readonly("a", &LinearBound::a)
      .def_property_readonly("b", &LinearBound::b)
      .def_property_readonly("t0", &LinearBound::t0)
      .def_property_readonly("method", [](const LinearBound& l) { return to_string(l.method()); })
      .def("value_at", &LinearBound::value_at, py::arg("T"));
  py::class_<MethodACoeffs>(m, "MethodACoeffs")
      .def_readonly("r", &MethodACoeffs::r)
      .def_readonly("a1", &MethodACoeffs::a1)
      .def_readonly("a2", &MethodACoeffs::a2)
      .def_readonly("a3", &MethodACoeffs::a3)
      .def_readonly("a4", &MethodACoeffs::a4)
      .def_readonly("a5", &MethodACoeffs::a5)
      .def("slope", &MethodACoeffs::slope);
  m.def("theorem_b_coeff_b", &theorem_b_coeff_b, py::arg("eta"), py::arg("theta"));
  m.def("theorem_b_coeff_b_limit", &theorem_b_coeff_b_limit, py::arg("theta"));
  m.def("theorem_b_coeff_a",
        [](double eta, double t0, const CriticalLineBound& cert) { return theorem_b_coeff_a({eta, t0, cert}); },
        py::arg("eta"), py::arg("t0"), py::arg("cert"));
  m.def("theorem_b_bound",
        [](double eta, double t0, const CriticalLineBound& cert) { return theorem_b_bound({eta, t0, cert}); },
        py::arg("eta"), py::arg("t0"), py::arg("cert"));
  m.def("rosser_bound", &rosser_bound, py::arg("t0"));
  m.def("method_a_coeffs", &method_a_coeffs, py::arg("r"), py::arg("theta"), py::arg("eta"), py::arg("t0"));
  m.def("method_a_bound", &method_a_bound, py::arg("coeffs"), py::arg("B"), py::arg("T"));

  // optimize
  py::class_<OptimizationResult>(m, "OptimizationResult")
      .def_readonly("t0", &OptimizationResult::t0)
      .def_readonly("mode", &OptimizationResult::mode)
      .def_readonly("best_eta", &OptimizationResult::best_eta)
      .def_readonly("best_delta", &OptimizationResult::best_delta)
      .def_readonly("bound", &OptimizationResult::bound)
      .def_readonly("total_at_t0", &OptimizationResult::total_at_t0)
      .def_readonly("evaluations", &OptimizationResult::evaluations);
  py::class_<TableRow>(m, "TableRow")
      .def_readonly("t0", &TableRow::t0)
      .def_readonly("rosser_b", &TableRow::rosser_b)
      .def_readonly("rosser_total", &TableRow::rosser_total)
      .def_readonly("conv_b", &TableRow::conv_b)
      .def_readonly("conv_total", &TableRow::conv_total)
      .def_readonly("subconv_b", &TableRow::subconv_b)
      .def_readonly("subconv_total", &TableRow::subconv_total);
  m.def("minimize_bound", &minimize_bound, py::arg("t0"), py::arg("mode"));
  m.def("crossover_height", &crossover_height, py::arg("lo"), py::arg("hi"));
  m.def("build_table", [](const std::vector<double>& heights) { return build_table(heights); },
        py::arg("t0_list"));

  // verify
  py::class_<ZeroScanResult>(m, "ZeroScanResult")
      .def_readonly("t_max", &ZeroScanResult::t_max)
      .def_readonly("zero_count", &ZeroScanResult::zero_count)
      .def_readonly("ordinates", &ZeroScanResult::sign_change_ordinates);
  py::class_<SEvaluation>(m, "SEvaluation")
      .def_readonly("t", &SEvaluation::t)
      .def_readonly("n_of_t", &SEvaluation::n_of_t)
      .def_readonly("theta_over_pi", &SEvaluation::theta_over_pi)
      .def_readonly("s_of_t", &SEvaluation::s_of_t);
  m.def("scan_zeros", &scan_zeros, py::arg("t_max"), py::arg("grid_step") = kDefaultGridStep,
        py::call_guard<py::gil_scoped_release>());
  m.def("s_of_t", &s_of_t, py::arg("t"), py::arg("scan"));
  m.def(
      "check_lemmas",
      [](int samples, std::uint64_t seed) {
        const LemmaReport r = check_lemmas(samples, seed);
        py::dict families;
        for (const auto& f : r.families) families[py::str(f.name)] = py::make_tuple(f.failures, f.worst_margin);
        return py::make_tuple(r.passed(), families);
      },
      py::arg("samples"), py::arg("seed"));
}
