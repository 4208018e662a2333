#include <cmath>
#include <numbers>

#include "ahg/ahg.hpp"
#include "ahg/transforms.hpp"
#include "doctest.h"
#include "reference_values.hpp"

using namespace ahg;

namespace {
constexpr cdouble kI{0.0, 1.0};
const AnisotropyMatrix& theta_t() {
  static const AnisotropyMatrix t((CMatrix(2, 2) << 0.6, 0.15, 0.15, 0.5).finished());
  return t;
}
CVector zeta_ref() { return (CVector(2) << 0.4, -0.2).finished(); }
Function mode_fn(const AnisotropyMatrix& t, const MultiIndex& nu) {
  return [m = AhgMode(t, nu)](const CVector& r) { return m(r); };
}
}  // namespace

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(LctParams(1.0, 1.0, 1.0, 1.0), DomainError);
  CHECK_NOTHROW(LctParams(0.5, 2.0, -0.3, 0.8));
  CHECK(LctParams::frft(0.3).is_real());
  CHECK_FALSE(LctParams::laplace().is_real());
  CHECK_THROWS_AS(lct_closed(LctParams(1.0, 0.0, 0.5, 1.0), theta_t(), MultiIndex{0, 0}), DomainError);
  CHECK_THROWS_AS(frft_closed(0.0, theta_t(), MultiIndex{0, 0}), DomainError);
  CHECK_THROWS_AS(lct_closed(LctParams::frft(0.9), theta_t(), MultiIndex{0}), UsageError);
}

TEST_CASE("Fourier closed form matches a frozen direct integral") {
  const TransformedMode t = fourier_closed(theta_t(), MultiIndex{1, 2});
  CHECK(std::abs(t(zeta_ref()) - ref::kFourier2d) < 1e-13);
  CHECK(std::abs(fourier_numeric(mode_fn(theta_t(), MultiIndex{1, 2}), zeta_ref(), theta_t(), 48) - ref::kFourier2d) < 1e-12);
}

TEST_CASE("fractional Fourier closed form matches a frozen direct integral") {
  LctOptions off;
  off.calibration = Calibration::Off;
  const TransformedMode t = lct_closed(LctParams::frft(0.7), theta_t(), MultiIndex{1, 2}, off);
  CHECK(std::abs(t(zeta_ref()) - ref::kLctFrft07) < 1e-13);
  REQUIRE(t.sigma.has_value());
  REQUIRE(t.xi.has_value());
  // Σ = Θ⁻¹ − i cot γ I
  const CMatrix sigma = theta_t().inverse() - kI / std::tan(0.7) * CMatrix::Identity(2, 2);
  CHECK(max_abs(*t.sigma - sigma) < 1e-14);
  const TransformedMode cal = lct_closed(LctParams::frft(0.7), theta_t(), MultiIndex{1, 2});
  CHECK(cal.calibration == cdouble(1.0));
}

TEST_CASE("scalar Xi matches hand algebra") {
  // n = 1, θ = 0.6, FrFT(γ): Ξ = sin²γ (2/(θ²σ) − 1/θ) with σ = 1/θ − i cot γ
  const double g = 1.1, th = 0.6;
  const AnisotropyMatrix t((CMatrix(1, 1) << th).finished());
  const TransformedMode m = lct_closed(LctParams::frft(g), t, MultiIndex{2});
  const cdouble sigma = 1.0 / th - kI / std::tan(g);
  const cdouble xi = std::sin(g) * std::sin(g) * (2.0 / (th * th * sigma) - 1.0 / th);
  CHECK(std::abs((*m.xi)(0, 0) - xi) < 1e-14);
}

TEST_CASE("Laplace closed form matches a frozen two-sided integral") {
  const AnisotropyMatrix t((CMatrix(1, 1) << 0.8).finished());
  const TransformedMode m = laplace_closed(t, MultiIndex{3});
  const CVector z = CVector::Constant(1, 0.6);
  CHECK(std::abs(m(z) - ref::kLaplace1d) < 1e-12);
  CHECK(std::abs(laplace_numeric(mode_fn(t, MultiIndex{3}), z, t, 48) - ref::kLaplace1d) < 1e-11);
}

TEST_CASE("Laplace eigenfunctions") {
  const MultiIndex nu{2, 1};
  const CVector z = (CVector(2) << 0.3, -0.5).finished();
  const cdouble lhs = laplace_eigenfunction_numeric(nu, z, 48);
  CHECK(std::abs(lhs - laplace_eigenvalue(nu) * laplace_eigenfunction(nu, z)) < 1e-11);
  // ν = 0, n = 1: π^{-1/4} √(2π) e^{ζ²/2}
  const CVector z1 = CVector::Constant(1, 0.9);
  const cdouble want = std::pow(std::numbers::pi, -0.25) * std::sqrt(2.0 * std::numbers::pi) * std::exp(0.405);
  CHECK(std::abs(laplace_closed(AnisotropyMatrix::identity(1), MultiIndex{0})(z1) - want) < 1e-13);
}

TEST_CASE("fractional transform eigenvalues on the identity anisotropy") {
  const auto id = AnisotropyMatrix::identity(2);
  const MultiIndex nu{1, 2};
  const CVector z = (CVector(2) << 0.25, 0.6).finished();
  for (double g : {0.9, 1.3, 2.0}) {
    const cdouble ratio = frft_closed(g, id, nu)(z) / eval(id, nu, z);
    CHECK(std::abs(ratio - std::polar(1.0, -3.0 * g)) < 1e-13);
  }
}

TEST_CASE("domain failures name the offending matrix") {
  const AnisotropyMatrix wide((CMatrix(2, 2) << 1.0, 0.3, 0.3, 0.8).finished());
  try {
    lct_closed(LctParams::frft(0.7), wide, MultiIndex{1, 1});
    FAIL("expected DomainError");
  } catch (const DomainError& e) {
    CHECK(std::string(e.what()).find("Xi") != std::string::npos);
  }
  LctOptions cont;
  cont.require_re_pd = false;
  CHECK_NOTHROW(lct_closed(LctParams::frft(0.7), wide, MultiIndex{1, 1}, cont));
}

TEST_CASE("eigenmode parameters") {
  const LctEigenmode e = lct_eigenmode(LctParams(2.0, 1.0, 3.0, 2.0), true);
  CHECK(std::abs(e.beta - cdouble(0.0, 1.0 / std::sqrt(3.0))) < 1e-14);
  CHECK_FALSE(e.re_pd);
  CHECK_THROWS_AS(lct_eigenmode(LctParams(2.0, 1.0, 3.0, 2.0)), DomainError);
  const LctEigenmode f = lct_eigenmode(LctParams::frft(0.4));
  CHECK(std::abs(f.beta - 1.0) < 1e-14);
}
