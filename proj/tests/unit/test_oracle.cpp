#include <cmath>
#include <numbers>

#include "ahg/ahg.hpp"
#include "ahg/oracle.hpp"
#include "doctest.h"
#include "reference_values.hpp"

using namespace ahg;

namespace {
const AnisotropyMatrix& theta2() {
  static const AnisotropyMatrix t((CMatrix(2, 2) << 1.0, 0.3, 0.3, 0.8).finished());
  return t;
}
Function mode_fn(const AnisotropyMatrix& t, const MultiIndex& nu, bool dual = false) {
  return [m = AhgMode(t, nu, dual)](const CVector& r) { return m(r); };
}
}  // namespace

TEST_CASE("Gauss-Hermite rule matches an independent implementation") {
  const GaussHermite g = gauss_hermite_rule(20);
  CHECK(g.nodes.back() == doctest::Approx(ref::kGh20Node).epsilon(1e-14));
  CHECK(g.weights.back() == doctest::Approx(ref::kGh20Weight).epsilon(1e-12));
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    CHECK(g.nodes[i] == doctest::Approx(-g.nodes[g.nodes.size() - 1 - i]).epsilon(1e-15));
    CHECK(g.scaled_weights[i] == doctest::Approx(g.weights[i] * std::exp(g.nodes[i] * g.nodes[i])));
  }
}

TEST_CASE("Gauss-Hermite weights sum to sqrt(pi) across the supported range") {
  for (int m : {2, 7, 64, 150, 200, 256}) {
    CAPTURE(m);
    const GaussHermite g = gauss_hermite_rule(m);
    CHECK(pairwise_sum(std::span<const double>(g.weights)) == doctest::Approx(std::sqrt(std::numbers::pi)).epsilon(1e-14));
  }
  CHECK_THROWS_AS(gauss_hermite_rule(1), UsageError);
  CHECK_THROWS_AS(gauss_hermite_rule(257), UsageError);
}

TEST_CASE("tensor rule integrates a shifted anisotropic Gaussian exactly") {
  const RMatrix p = (RMatrix(2, 2) << 1.5, 0.4, 0.4, 0.9).finished();
  const RVector c = (RVector(2) << 0.3, -0.7).finished();
  const QuadratureRule rule(12, whitening_for(p), c);
  CHECK(rule.size() == 144);
  const Function f = [&](const CVector& x) {
    const RVector d = x.real() - c;
    return cdouble(std::exp(-d.dot(p * d)) * (1.0 + d(0) * d(1)));
  };
  // ∫ e^{−dᵀPd}(1 + d₀d₁) = π/√|P| − (π/√|P|)·½(P⁻¹)₀₁
  const double base = std::numbers::pi / std::sqrt(p.determinant());
  CHECK(std::abs(rule.integrate(f) - (base + base * 0.5 * p.inverse()(0, 1))) < 1e-13);
  CHECK_THROWS_AS(whitening_for(-p), ConvergenceError);
}

TEST_CASE("biorthonormality of modes and duals") {
  const std::vector<MultiIndex> degrees = degrees_up_to(2, 2);
  CHECK(degrees.size() == 6);
  CHECK(degrees.front() == MultiIndex{0, 0});
  std::vector<Function> fs, gs;
  for (const auto& nu : degrees) {
    fs.push_back(mode_fn(theta2(), nu));
    gs.push_back(mode_fn(theta2(), nu, true));
  }
  const CMatrix g = gram(fs, gs, theta2(), 40, true);
  CHECK(max_abs(g - CMatrix::Identity(6, 6)) < 1e-12);
  const QuadratureResult r = inner_product(fs[3], gs[3], theta2(), 40);
  CHECK(std::abs(r.value - 1.0) < 1e-12);
  CHECK_FALSE(r.warning());
}

TEST_CASE("complex anisotropy pairs bilinearly") {
  const AnisotropyMatrix tc((CMatrix(2, 2) << cdouble(1.0, 0.25), 0.2, 0.2, cdouble(0.8, -0.1)).finished());
  const auto f = mode_fn(tc, MultiIndex{2, 1});
  const auto g = mode_fn(tc, MultiIndex{2, 1}, true);
  const auto h = mode_fn(tc, MultiIndex{1, 2}, true);
  CHECK(std::abs(bilinear_product(f, g, tc, 48).value - 1.0) < 1e-12);
  CHECK(std::abs(bilinear_product(f, h, tc, 48).value) < 1e-12);
}

TEST_CASE("expansion recovers coefficients and reports a residual") {
  const Function f = [&](const CVector& x) {
    return 0.5 * eval(theta2(), MultiIndex{0, 1}, x) - cdouble(0.0, 2.0) * eval(theta2(), MultiIndex{3, 0}, x);
  };
  const ExpansionResult r = expand(f, theta2(), 3, 40);
  CHECK(std::abs(r.expansion.coefficient(MultiIndex{0, 1}) - 0.5) < 1e-12);
  CHECK(std::abs(r.expansion.coefficient(MultiIndex{3, 0}) - cdouble(0.0, -2.0)) < 1e-12);
  CHECK(std::abs(r.expansion.coefficient(MultiIndex{1, 1})) < 1e-12);
  CHECK(r.residual < 1e-10);
  const ExpansionResult low = expand(f, theta2(), 2, 40);
  CHECK(low.residual > 1.0);
}

TEST_CASE("finite difference stencils") {
  const Function f = [](const CVector& x) { return std::exp(x(0)) * std::sin(x(1)); };
  const CVector r = (CVector(2) << 0.3, 0.8).finished();
  const CVector g = fd_gradient(f, r);
  CHECK(std::abs(g(0) - std::exp(0.3) * std::sin(0.8)) < 1e-9);
  CHECK(std::abs(g(1) - std::exp(0.3) * std::cos(0.8)) < 1e-9);
  const CMatrix h = fd_hessian(f, r);
  CHECK(std::abs(h(0, 1) - std::exp(0.3) * std::cos(0.8)) < 1e-7);
  CHECK(std::abs(fd_laplacian(f, r)) < 1e-8);
  CHECK_THROWS_AS(fd_gradient(f, r, 1.0), UsageError);
}
