#include <cmath>
#include <numbers>

#include "ahg/ahg.hpp"
#include "ahg/wigner.hpp"
#include "doctest.h"
#include "reference_values.hpp"

using namespace ahg;

namespace {
RVector v1(double x) { return RVector::Constant(1, x); }
}  // namespace

TEST_CASE("pair kernel matches a frozen direct integral") {
  const AnisotropyMatrix t((CMatrix(1, 1) << 1.3).finished());
  const PhasePoint p(v1(0.3), v1(-0.4));
  CHECK(std::abs(wvd_pair(t, MultiIndex{2}, MultiIndex{1}, p) - ref::kWvdPair1d) < 1e-14);
  const Function f = [&](const CVector& x) { return eval(t, MultiIndex{2}, x); };
  const Function g = [&](const CVector& x) { return eval(t, MultiIndex{1}, x); };
  CHECK(std::abs(wvd_cross_numeric(f, g, p, t, 48) - ref::kWvdPair1d) < 1e-13);
}

TEST_CASE("Gaussian Wigner function") {
  // HG_0 on Θ = I, n = 1: W = √(2/π) e^{−r² − ζ²} with the (2π)^{-1/2} convention
  const auto id = AnisotropyMatrix::identity(1);
  const PhasePoint p(v1(0.5), v1(-0.2));
  const double want = std::sqrt(2.0 / std::numbers::pi) * std::exp(-0.25 - 0.04);
  CHECK(std::abs(wvd_pair(id, MultiIndex{0}, MultiIndex{0}, p) - want) < 1e-15);
  CHECK(std::abs(wvd_pair(id, MultiIndex{0}, MultiIndex{0}, PhasePoint(v1(-0.5), v1(0.2))) - want) < 1e-15);
}

TEST_CASE("expansion is real and agrees with quadrature") {
  const AnisotropyMatrix t((CMatrix(2, 2) << 1.0, 0.3, 0.3, 0.8).finished());
  const ModeExpansion f(t, {{MultiIndex{1, 0}, cdouble(0.3, 0.4)}, {MultiIndex{0, 2}, 1.0}, {MultiIndex{1, 1}, cdouble(0, -1)}});
  const WvdExpansion w(f);
  const Function ff = [&](const CVector& x) { return f(x); };
  const PhasePoint p((RVector(2) << 0.2, -0.4).finished(), (RVector(2) << 0.7, 0.1).finished());
  const cdouble closed = w(p);
  CHECK(std::abs(closed.imag()) < 1e-15);
  CHECK(std::abs(closed - wvd_numeric(ff, p, t, 40)) < 1e-12);
  CHECK(std::abs(wvd_expansion(f, p) - closed) < 1e-15);
}

TEST_CASE("grid oracle agrees with pointwise oracle") {
  const auto id = AnisotropyMatrix::identity(1);
  const Function f = [&](const CVector& x) { return eval(id, MultiIndex{3}, x); };
  const std::vector<RVector> rs{v1(0.1), v1(-0.8)}, zs{v1(0.0), v1(1.2), v1(-0.3)};
  const CMatrix grid = wvd_numeric_grid(f, rs, zs, id, 40);
  for (std::size_t a = 0; a < rs.size(); ++a)
    for (std::size_t b = 0; b < zs.size(); ++b)
      CHECK(std::abs(grid(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) -
                     wvd_numeric(f, PhasePoint(rs[a], zs[b]), id, 40)) < 1e-15);
}

TEST_CASE("invalid inputs") {
  const AnisotropyMatrix tc((CMatrix(1, 1) << cdouble(1.0, 0.1)).finished());
  CHECK_THROWS_AS(wvd_pair(tc, MultiIndex{0}, MultiIndex{0}, PhasePoint(v1(0), v1(0))), DomainError);
  CHECK_THROWS_AS(PhasePoint(v1(0), RVector::Zero(2)), UsageError);
  CHECK(wvd_marginal_constant(2) == doctest::Approx(2.0 * std::numbers::pi));
}
