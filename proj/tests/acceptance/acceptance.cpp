// One PASS/FAIL line per acceptance criterion. Every criterion is backed by
// checks from the verification suites, run once in this process.

#include <chrono>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "ahg/io.hpp"
#include "ahg/verify.hpp"

namespace {

struct Criterion {
  int id;
  std::string title;
  std::vector<std::string> checks;  // "suite.check"
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> c = {
      {1, "orthonormality n=2, |nu|,|mu| <= 3, 80 nodes, < 60 s",
       {"orthogonality.biorthonormal_real", "orthogonality.runtime_seconds"}},
      {2, "decomposition into univariate modes for Theta = I", {"decomposition.identity_theta_product"}},
      {3, "generating function, order 30, |x| <= 0.3", {"generating.primal_order30"}},
      {4, "gradient, Hessian, Laplacian vs finite differences; trace identity",
       {"derivatives.gradient_vs_fd", "derivatives.hessian_vs_fd", "derivatives.laplacian_vs_fd",
        "derivatives.trace_hessian_eq_laplacian"}},
      {5, "anisotropy transformation reconstruction", {"anisotropy.reconstruction"}},
      {6, "offset and product expansions", {"offset.shifted_argument", "product.product_of_modes"}},
      {7, "value at zero", {"zero.closed_vs_eval"}},
      {8, "Fourier closed form, eigenrelation, real/imaginary parity",
       {"fourier.closed_vs_quadrature", "fourier.identity_eigenrelation", "fourier.real_theta_parity"}},
      {9, "LCT closed vs numeric after calibration; Sigma/Xi preconditions",
       {"lct.closed_vs_numeric_frft0.7", "lct.closed_vs_numeric_shear", "lct.calibration_is_unity_frft0.7",
        "lct.calibration_is_unity_shear", "lct.xi_not_re_pd_rejected", "lct.sigma_not_re_pd_rejected"}},
      {10, "LCT eigenmodes for a = d = 2, b = 1", {"eigen.a2_b1_eigenrelation"}},
      {11, "FrFT quarter turn, additivity, small-angle limit",
       {"frft.quarter_turn_equals_fourier", "frft.eigenvalue_additivity", "frft.small_angle_limit_decreasing"}},
      {12, "Laplace eigenfunctions and Gaussian case", {"laplace.eigenfunction_relation", "laplace.gaussian_analytic"}},
      {13, "WVD closed vs numeric, realness, conjugate symmetry",
       {"wvd.pair_closed_vs_quadrature", "wvd.expansion_realness", "wvd.pair_conjugate_symmetry"}},
  };
  return c;
}

}  // namespace

int main() {
  using Clock = std::chrono::steady_clock;
  const auto t0 = Clock::now();
  const auto results = ahg::run_suite("all");
  const double seconds = std::chrono::duration<double>(Clock::now() - t0).count();

  std::map<std::string, const ahg::CheckResult*> by_key;
  for (const auto& r : results) by_key[r.suite + "." + r.name] = &r;

  int failed = 0;
  for (const Criterion& c : criteria()) {
    bool pass = true;
    std::string detail;
    for (const std::string& key : c.checks) {
      const auto it = by_key.find(key);
      if (it == by_key.end()) {
        pass = false;
        detail += " " + key + "=missing";
        continue;
      }
      const ahg::CheckResult& r = *it->second;
      pass = pass && r.passed;
      detail += " " + r.name + "=" + ahg::format_double(r.error) + "<" + ahg::format_double(r.tolerance);
    }
    failed += pass ? 0 : 1;
    std::printf("%s criterion %d: %s |%s\n", pass ? "PASS" : "FAIL", c.id, c.title.c_str(), detail.c_str());
  }
  const bool fast = seconds < 300.0;
  failed += fast ? 0 : 1;
  std::printf("%s criterion 14: full verification run under 5 minutes | %.2f s for %zu checks\n",
              fast ? "PASS" : "FAIL", seconds, results.size());
  return failed == 0 ? 0 : 1;
}
