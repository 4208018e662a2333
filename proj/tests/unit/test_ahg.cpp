#include <cmath>
#include <numbers>
#include <random>

#include "ahg/ahg.hpp"
#include "ahg/hermite1d.hpp"
#include "doctest.h"
#include "reference_values.hpp"

using namespace ahg;

namespace {

AnisotropyMatrix from_rows(const std::vector<std::vector<cdouble>>& rows) {
  const auto n = static_cast<Eigen::Index>(rows.size());
  CMatrix m(n, n);
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index k = 0; k < n; ++k) m(j, k) = rows[j][k];
  return AnisotropyMatrix(m);
}

CVector vec(std::initializer_list<double> v) {
  CVector out(static_cast<Eigen::Index>(v.size()));
  Eigen::Index i = 0;
  for (double x : v) out(i++) = x;
  return out;
}

const AnisotropyMatrix& theta2() {
  static const AnisotropyMatrix t((CMatrix(2, 2) << 1.0, 0.3, 0.3, 0.8).finished());
  return t;
}

}  // namespace

TEST_CASE("modes and duals match frozen generating-function coefficients") {
  for (const auto& c : ref::kAhg) {
    const AnisotropyMatrix theta = from_rows(c.theta);
    const MultiIndex nu{std::vector<int>(c.nu)};
    CVector r(static_cast<Eigen::Index>(c.r.size()));
    for (std::size_t k = 0; k < c.r.size(); ++k) r(static_cast<Eigen::Index>(k)) = c.r[k];
    CAPTURE(nu.to_string());
    CHECK(std::abs(eval(theta, nu, r) - c.value) < 1e-13);
    CHECK(std::abs(eval_dual(theta, nu, r) - c.dual) < 1e-13);
    CHECK(std::abs(AhgMode(theta, nu, true)(r) - c.dual) < 1e-13);
  }
}

TEST_CASE("identity anisotropy factorizes into univariate modes") {
  const auto id = AnisotropyMatrix::identity(3);
  const CVector r = vec({0.3, -1.2, 0.8});
  const MultiIndex nu{3, 0, 2};
  CHECK(std::abs(eval(id, nu, r) - hg1(3, 0.3) * hg1(0, -1.2) * hg1(2, 0.8)) < 1e-15);
  CHECK(std::abs(eval_dual(id, nu, r) - eval(id, nu, r)) < 1e-15);
}

TEST_CASE("parity, conjugation and realness") {
  const MultiIndex nu{2, 1};
  const CVector r = vec({0.4, -0.9});
  CHECK(std::abs(eval(theta2(), nu, -r) + eval(theta2(), nu, r)) < 1e-15);
  CHECK(std::abs(eval(theta2(), nu, r).imag()) < 1e-16);
  const AnisotropyMatrix tc((CMatrix(2, 2) << cdouble(1.0, 0.3), 0.2, 0.2, cdouble(0.9, -0.1)).finished());
  // HG^{Θ*}(r*) = HG^Θ(r)*
  const CVector z = (CVector(2) << cdouble(0.3, 0.2), cdouble(-0.5, 0.1)).finished();
  CHECK(std::abs(eval(tc.conjugated(), nu, z.conjugate()) - std::conj(eval(tc, nu, z))) < 1e-14);
}

TEST_CASE("generating function partial sums converge to the closed form") {
  const CVector x = vec({0.2, -0.1});
  const CVector r = vec({0.5, 0.3});
  for (bool dual : {false, true}) {
    const cdouble closed = generating_closed(theta2(), x, r, dual);
    CHECK(std::abs(generating_sum(theta2(), x, r, 25, dual) - closed) / std::abs(closed) < 1e-12);
  }
}

TEST_CASE("value at zero") {
  std::mt19937_64 g(7);
  std::uniform_real_distribution<double> u(-0.2, 0.2);
  const AnisotropyMatrix tc((CMatrix(2, 2) << cdouble(1.0, 0.2), 0.3, 0.3, cdouble(0.8, -0.1)).finished());
  for (const MultiIndex& nu : {MultiIndex{0, 0}, MultiIndex{1, 0}, MultiIndex{2, 2}, MultiIndex{5, 3}, MultiIndex{4, 0}})
    CHECK(std::abs(eval_at_zero(tc, nu) - eval(tc, nu, CVector::Zero(2))) < 1e-14);
  CHECK(eval_at_zero(theta2(), MultiIndex{1, 2}) == cdouble(0.0));
}

TEST_CASE("derivatives agree with the lowering identities") {
  const MultiIndex nu{2, 1};
  const CVector r = vec({0.4, -0.3});
  const CVector g = gradient(theta2(), nu, r);
  const CMatrix h = hessian(theta2(), nu, r);
  CHECK(max_abs(h - h.transpose()) < 1e-15);
  CHECK(std::abs(h.trace() - laplacian(theta2(), nu, r)) < 1e-14);
  for (std::size_t j = 0; j < 2; ++j) CHECK(std::abs(partial(theta2(), nu, r, j) - g(static_cast<Eigen::Index>(j))) < 1e-15);
  // central difference on the ν = 0 Gaussian: ∇ HG_0 = −Θ⁻¹ r HG_0
  const MultiIndex zero{0, 0};
  const CVector expected = -theta2().inverse() * r * eval(theta2(), zero, r);
  CHECK(max_abs(gradient(theta2(), zero, r) - expected) < 1e-15);
  const CVector phi = lowering_vector(theta2(), nu, r);
  CHECK(phi.size() == 2);
  // φ_k = √(ν_k/2) HG_{ν−ε_k}
  CHECK(std::abs(phi(0) - eval(theta2(), MultiIndex{1, 1}, r)) < 1e-15);
  CHECK(std::abs(phi(1) - std::sqrt(0.5) * eval(theta2(), MultiIndex{2, 0}, r)) < 1e-15);
  CHECK(lowering_vector(theta2(), MultiIndex{0, 1}, r)(0) == cdouble(0.0));
}

TEST_CASE("anisotropy, offset and product expansions reproduce direct evaluation") {
  const AnisotropyMatrix t2((CMatrix(2, 2) << 0.7, -0.1, -0.1, 1.3).finished());
  const MultiIndex nu{3, 1};
  const ModeExpansion ex = anisotropy_transform(theta2(), t2, nu);
  CHECK(ex.max_degree() == nu.degree());
  const CVector s = vec({0.2, -0.4});
  const OffsetExpansion off(theta2(), nu, s);
  const ProductExpansion prod(theta2(), nu, MultiIndex{1, 2});
  for (const CVector& r : {vec({0.1, 0.2}), vec({-1.3, 0.7}), vec({2.0, -0.5})}) {
    CHECK(std::abs(ex(r) - eval(theta2(), nu, r)) < 1e-13);
    CHECK(std::abs(off(r) - eval(theta2(), nu, r + s)) < 1e-13);
    CHECK(std::abs(prod(r) - eval(theta2(), nu, r) * eval(theta2(), MultiIndex{1, 2}, r)) < 1e-13);
  }
  // Θ₁ = Θ₂ leaves a single term
  const ModeExpansion same = anisotropy_transform(theta2(), theta2(), nu);
  CHECK(std::abs(same.coefficient(nu) - 1.0) < 1e-14);
}

TEST_CASE("mode evaluation validates its inputs") {
  CHECK_THROWS_AS(eval(theta2(), MultiIndex{1}, vec({0.0, 0.0})), UsageError);
  CHECK_THROWS_AS(eval(theta2(), MultiIndex{1, 0}, vec({0.0})), UsageError);
  CHECK_THROWS_AS(anisotropy_transform(theta2(), AnisotropyMatrix::identity(2), MultiIndex{kMaxExpansionDegree + 1, 0}),
                  ResourceError);
  CHECK(AhgMode::lowered(theta2(), MultiIndex{0, 1}, 0).is_zero());
  CHECK(AhgMode::zero(2)(vec({1.0, 1.0})) == cdouble(0.0));
}
