#include <cmath>

#include "ahg/cmatrix.hpp"
#include "doctest.h"

using namespace ahg;

namespace {
CMatrix mat2(cdouble a, cdouble b, cdouble d) { return (CMatrix(2, 2) << a, b, b, d).finished(); }
}  // namespace

TEST_CASE("anisotropy matrix caches inverse, roots and determinant powers") {
  const AnisotropyMatrix t(mat2(1.0, 0.3, 0.8));
  CHECK(t.dim() == 2);
  CHECK(t.is_real());
  CHECK(max_abs(t.matrix() * t.inverse() - CMatrix::Identity(2, 2)) < 1e-14);
  CHECK(max_abs(t.sqrt() * t.sqrt() - t.matrix()) < 1e-14);
  CHECK(max_abs(t.inverse_sqrt() * t.sqrt() - CMatrix::Identity(2, 2)) < 1e-14);
  CHECK(std::abs(t.det() - cdouble(0.71)) < 1e-14);
  CHECK(std::abs(t.det_quarter() - std::pow(0.71, 0.25)) < 1e-14);
}

TEST_CASE("complex symmetric matrices use the spectral determinant branch") {
  const CMatrix m = mat2({1.0, 0.8}, 0.2, {0.9, -0.7});
  const AnisotropyMatrix t(m);
  CHECK_FALSE(t.is_real());
  const Eigen::ComplexEigenSolver<CMatrix> es(m);
  cdouble expected = 1.0;
  for (Eigen::Index k = 0; k < 2; ++k) expected *= std::pow(es.eigenvalues()(k), 0.25);
  CHECK(std::abs(t.det_quarter() - expected) < 1e-13);
  CHECK(std::abs(std::pow(t.det_quarter(), 4) - m.determinant()) < 1e-13);
  // the inverse shares the branch
  CHECK(std::abs(t.inverted().det_quarter() * t.det_quarter() - 1.0) < 1e-13);
  CHECK(max_abs(t.conjugated().matrix() - m.conjugate()) == 0.0);
}

TEST_CASE("construction rejects invalid anisotropy matrices") {
  CHECK_THROWS_AS(AnisotropyMatrix((CMatrix(2, 2) << 1.0, 0.3, 0.2, 1.0).finished()), DomainError);
  CHECK_THROWS_AS(AnisotropyMatrix(mat2(1.0, 2.0, 1.0)), DomainError);
  CHECK_THROWS_AS(AnisotropyMatrix(mat2(-1.0, 0.0, 1.0)), DomainError);
  CHECK_THROWS_AS(AnisotropyMatrix(CMatrix(2, 3)), UsageError);
  CHECK_THROWS_AS(AnisotropyMatrix(mat2(std::nan(""), 0.0, 1.0)), UsageError);
  CHECK_THROWS_AS(AnisotropyMatrix::identity(kMaxDimension + 1), UsageError);
  CHECK_NOTHROW(AnisotropyMatrix::identity(kMaxDimension));
}

TEST_CASE("continued matrices only need a principal root") {
  const CMatrix m = cdouble(0.0, 0.6) * CMatrix::Identity(2, 2);
  CHECK_THROWS_AS(AnisotropyMatrix{m}, DomainError);
  const AnisotropyMatrix c = AnisotropyMatrix::continued(m);
  CHECK_FALSE(c.re_pd());
  CHECK(max_abs(c.sqrt() * c.sqrt() - m) < 1e-14);
  CHECK_THROWS_AS(AnisotropyMatrix::continued(-CMatrix::Identity(2, 2)), DomainError);
}

TEST_CASE("principal square root of a complex matrix") {
  const CMatrix m = mat2({2.0, 1.0}, {0.5, -0.2}, {1.0, -0.5});
  const MatrixSqrt s = principal_sqrt(m);
  CHECK(max_abs(s.root * s.root - m) < 1e-13);
  CHECK(max_abs(s.inverse_root * s.root - CMatrix::Identity(2, 2)) < 1e-13);
  const Eigen::ComplexEigenSolver<CMatrix> es(s.root);
  for (Eigen::Index k = 0; k < 2; ++k) CHECK(es.eigenvalues()(k).real() > 0.0);
}

TEST_CASE("real-part positive definiteness and helpers") {
  CHECK(re_pd_check(mat2({1.0, 5.0}, 0.0, {1.0, -3.0})));
  CHECK_FALSE(re_pd_check(mat2(1.0, 1.0, 1.0)));
  CHECK(is_real(mat2(1.0, 2.0, 3.0)));
  CHECK_FALSE(is_real(mat2({1.0, 1e-20}, 2.0, 3.0)));
  const std::vector<cdouble> v(1000, cdouble(0.1, -0.1));
  CHECK(std::abs(pairwise_sum(v) - cdouble(100.0, -100.0)) < 1e-12);
  CVector r(2);
  r << 1.0, 2.0;
  CHECK(quad_form(mat2(1.0, 0.5, 2.0), r) == cdouble(11.0));
  const auto ev = symmetric_eigenvalues((RMatrix(2, 2) << 2.0, 1.0, 1.0, 2.0).finished());
  CHECK(ev[0] == doctest::Approx(1.0));
  CHECK(ev[1] == doctest::Approx(3.0));
}
