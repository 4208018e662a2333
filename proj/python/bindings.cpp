// Python bindings for the ahg core library.

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ahg/ahg.hpp"
#include "ahg/hermite1d.hpp"
#include "ahg/oracle.hpp"
#include "ahg/transforms.hpp"
#include "ahg/verify.hpp"
#include "ahg/wigner.hpp"

namespace py = pybind11;
using namespace ahg;

namespace {

MultiIndex to_index(const std::vector<int>& v) { return MultiIndex(v); }

std::vector<int> from_index(const MultiIndex& nu) { return {nu.entries().begin(), nu.entries().end()}; }

std::map<MultiIndex, cdouble> to_terms(const std::map<std::vector<int>, cdouble>& coeffs) {
  std::map<MultiIndex, cdouble> out;
  for (const auto& [k, v] : coeffs) out[MultiIndex(k)] += v;
  return out;
}

// Rows of points → values, evaluated without holding the GIL.
template <class F>
CVector eval_rows(const CMatrix& points, F&& f) {
  CVector out(points.rows());
  py::gil_scoped_release release;
  for (Eigen::Index i = 0; i < points.rows(); ++i) out(i) = f(CVector(points.row(i).transpose()));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Anisotropic Hermite-Gauss functions, their transforms and Wigner distributions";

  auto base = py::register_exception<Error>(m, "AhgError", PyExc_RuntimeError);
  py::register_exception<UsageError>(m, "UsageError", base.ptr());
  auto domain = py::register_exception<DomainError>(m, "DomainError", base.ptr());
  py::register_exception<SingularError>(m, "SingularError", domain.ptr());
  py::register_exception<ConvergenceError>(m, "ConvergenceError", base.ptr());
  py::register_exception<ResourceError>(m, "ResourceError", base.ptr());

  py::class_<AnisotropyMatrix>(m, "AnisotropyMatrix")
      .def(py::init<const CMatrix&, double>(), py::arg("theta"), py::arg("pd_tol") = kDefaultPdTol)
      .def_static("identity", &AnisotropyMatrix::identity, py::arg("n"))
      .def_static("continued", &AnisotropyMatrix::continued, py::arg("theta"))
      .def_property_readonly("dim", &AnisotropyMatrix::dim)
      .def_property_readonly("matrix", &AnisotropyMatrix::matrix)
      .def_property_readonly("inverse", &AnisotropyMatrix::inverse)
      .def_property_readonly("sqrt", &AnisotropyMatrix::sqrt)
      .def_property_readonly("det_quarter", &AnisotropyMatrix::det_quarter)
      .def_property_readonly("is_real", &AnisotropyMatrix::is_real)
      .def_property_readonly("re_pd", &AnisotropyMatrix::re_pd)
      .def("inverted", &AnisotropyMatrix::inverted)
      .def("conjugated", &AnisotropyMatrix::conjugated);

  m.def("hg1", &hg1, py::arg("k"), py::arg("z"));
  m.def(
      "eval", [](const AnisotropyMatrix& t, const std::vector<int>& nu, const CVector& r) { return eval(t, to_index(nu), r); },
      py::arg("theta"), py::arg("nu"), py::arg("r"));
  m.def(
      "eval_dual",
      [](const AnisotropyMatrix& t, const std::vector<int>& nu, const CVector& r) { return eval_dual(t, to_index(nu), r); },
      py::arg("theta"), py::arg("nu"), py::arg("r"));
  m.def(
      "eval_points",
      [](const AnisotropyMatrix& t, const std::vector<int>& nu, const CMatrix& points, bool dual) {
        const AhgMode mode(t, to_index(nu), dual);
        if (static_cast<std::size_t>(points.cols()) != t.dim()) throw UsageError("points must have n columns");
        return eval_rows(points, [&](const CVector& r) { return mode(r); });
      },
      py::arg("theta"), py::arg("nu"), py::arg("points"), py::arg("dual") = false,
      "Evaluate one mode at every row of an (N, n) array.");
  m.def(
      "eval_at_zero", [](const AnisotropyMatrix& t, const std::vector<int>& nu) { return eval_at_zero(t, to_index(nu)); },
      py::arg("theta"), py::arg("nu"));
  m.def(
      "gradient",
      [](const AnisotropyMatrix& t, const std::vector<int>& nu, const CVector& r) { return gradient(t, to_index(nu), r); },
      py::arg("theta"), py::arg("nu"), py::arg("r"));
  m.def(
      "hessian",
      [](const AnisotropyMatrix& t, const std::vector<int>& nu, const CVector& r) { return hessian(t, to_index(nu), r); },
      py::arg("theta"), py::arg("nu"), py::arg("r"));
  m.def(
      "laplacian",
      [](const AnisotropyMatrix& t, const std::vector<int>& nu, const CVector& r) { return laplacian(t, to_index(nu), r); },
      py::arg("theta"), py::arg("nu"), py::arg("r"));
  m.def("generating_sum", &generating_sum, py::arg("theta"), py::arg("x"), py::arg("r"), py::arg("max_order"),
        py::arg("dual") = false);
  m.def("generating_closed", &generating_closed, py::arg("theta"), py::arg("x"), py::arg("r"), py::arg("dual") = false);

  py::class_<ModeExpansion>(m, "ModeExpansion")
      .def(py::init([](const AnisotropyMatrix& t, const std::map<std::vector<int>, cdouble>& c) {
             return ModeExpansion(t, to_terms(c));
           }),
           py::arg("theta"), py::arg("coefficients"))
      .def("__call__", &ModeExpansion::operator(), py::arg("r"))
      .def("coefficient", [](const ModeExpansion& e, const std::vector<int>& nu) { return e.coefficient(to_index(nu)); })
      .def_property_readonly("coefficients", [](const ModeExpansion& e) {
        std::map<std::vector<int>, cdouble> out;
        for (const auto& [nu, c] : e.terms()) out[from_index(nu)] = c;
        return out;
      });
  m.def(
      "anisotropy_transform",
      [](const AnisotropyMatrix& a, const AnisotropyMatrix& b, const std::vector<int>& nu) {
        return anisotropy_transform(a, b, to_index(nu));
      },
      py::arg("theta1"), py::arg("theta2"), py::arg("nu"));

  py::enum_<Calibration>(m, "Calibration").value("Auto", Calibration::Auto).value("On", Calibration::On).value("Off", Calibration::Off);
  py::class_<LctOptions>(m, "LctOptions")
      .def(py::init<>())
      .def_readwrite("calibration", &LctOptions::calibration)
      .def_readwrite("require_re_pd", &LctOptions::require_re_pd)
      .def_readwrite("calibration_nodes", &LctOptions::calibration_nodes);
  py::class_<LctParams>(m, "LctParams")
      .def(py::init<cdouble, cdouble, cdouble, cdouble>(), py::arg("a"), py::arg("b"), py::arg("c"), py::arg("d"))
      .def_static("ft", &LctParams::ft)
      .def_static("frft", &LctParams::frft, py::arg("gamma"))
      .def_static("laplace", &LctParams::laplace)
      .def_readonly("a", &LctParams::a)
      .def_readonly("b", &LctParams::b)
      .def_readonly("c", &LctParams::c)
      .def_readonly("d", &LctParams::d)
      .def("__repr__", &LctParams::to_string);
  py::class_<TransformedMode>(m, "TransformedMode")
      .def("__call__", &TransformedMode::operator(), py::arg("zeta"))
      .def(
          "eval_points",
          [](const TransformedMode& t, const CMatrix& points) { return eval_rows(points, [&](const CVector& z) { return t(z); }); },
          py::arg("points"))
      .def_property_readonly("prefactor", &TransformedMode::prefactor)
      .def_property_readonly("quad_matrix", &TransformedMode::quad_matrix)
      .def_property_readonly("arg_map", &TransformedMode::arg_map)
      .def_readonly("sigma", &TransformedMode::sigma)
      .def_readonly("xi", &TransformedMode::xi)
      .def_readonly("calibration", &TransformedMode::calibration)
      .def_readonly("calibrated", &TransformedMode::calibrated);

  m.def(
      "lct_closed",
      [](const LctParams& a, const AnisotropyMatrix& t, const std::vector<int>& nu, const LctOptions& o) {
        return lct_closed(a, t, to_index(nu), o);
      },
      py::arg("params"), py::arg("theta"), py::arg("nu"), py::arg("options") = LctOptions{});
  m.def(
      "fourier_closed", [](const AnisotropyMatrix& t, const std::vector<int>& nu) { return fourier_closed(t, to_index(nu)); },
      py::arg("theta"), py::arg("nu"));
  m.def(
      "frft_closed",
      [](double g, const AnisotropyMatrix& t, const std::vector<int>& nu, const LctOptions& o) {
        return frft_closed(g, t, to_index(nu), o);
      },
      py::arg("gamma"), py::arg("theta"), py::arg("nu"), py::arg("options") = LctOptions{});
  m.def(
      "laplace_closed", [](const AnisotropyMatrix& t, const std::vector<int>& nu) { return laplace_closed(t, to_index(nu)); },
      py::arg("theta"), py::arg("nu"));
  m.def(
      "laplace_eigenvalue", [](const std::vector<int>& nu) { return laplace_eigenvalue(to_index(nu)); }, py::arg("nu"));
  m.def("lct_numeric", &lct_numeric, py::arg("params"), py::arg("f"), py::arg("zeta"), py::arg("envelope_hint"),
        py::arg("nodes") = kDefaultQuadratureNodes);

  m.def(
      "wvd_pair",
      [](const AnisotropyMatrix& t, const std::vector<int>& nu, const std::vector<int>& mu, const RVector& r,
         const RVector& zeta) { return wvd_pair(t, to_index(nu), to_index(mu), PhasePoint(r, zeta)); },
      py::arg("theta"), py::arg("nu"), py::arg("mu"), py::arg("r"), py::arg("zeta"));
  m.def(
      "wvd_expansion",
      [](const ModeExpansion& f, const RMatrix& rs, const RMatrix& zetas) {
        if (rs.rows() != zetas.rows()) throw UsageError("r and zeta need the same number of rows");
        const WvdExpansion w(f);
        CVector out(rs.rows());
        py::gil_scoped_release release;
        for (Eigen::Index i = 0; i < rs.rows(); ++i)
          out(i) = w(PhasePoint(rs.row(i).transpose(), zetas.row(i).transpose()));
        return out;
      },
      py::arg("expansion"), py::arg("r"), py::arg("zeta"), "WVD at paired rows of (N, n) position and frequency arrays.");

  py::class_<GaussHermite>(m, "GaussHermite")
      .def_readonly("nodes", &GaussHermite::nodes)
      .def_readonly("weights", &GaussHermite::weights);
  m.def("gauss_hermite_rule", &gauss_hermite_rule, py::arg("m"));
  m.def(
      "expand",
      [](const Function& f, const AnisotropyMatrix& t, int max_order, int nodes) {
        const ExpansionResult r = expand(f, t, max_order, nodes);
        return py::make_tuple(r.expansion, r.residual, r.tail_ratio);
      },
      py::arg("f"), py::arg("theta"), py::arg("max_order"), py::arg("nodes") = kDefaultQuadratureNodes,
      "Returns (expansion, residual, tail_ratio).");

  m.def("suite_names", &suite_names);
  m.def(
      "run_suite",
      [](const std::string& name, std::optional<double> tolerance) {
        VerifyOptions o;
        o.tolerance = tolerance;
        std::vector<CheckResult> results;
        {
          py::gil_scoped_release release;
          results = run_suite(name, o);
        }
        py::list out;
        for (const auto& c : results) {
          py::dict d;
          d["suite"] = c.suite;
          d["name"] = c.name;
          d["error"] = c.error;
          d["tolerance"] = c.tolerance;
          d["passed"] = c.passed;
          d["note"] = c.note;
          out.append(d);
        }
        return out;
      },
      py::arg("name") = "all", py::arg("tolerance") = std::nullopt);
}
