#pragma once

// Small dense complex-symmetric linear algebra for anisotropy matrices.

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "ahg/error.hpp"

namespace ahg {

using cdouble = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;

/// Library contract on the dimension n.
inline constexpr std::size_t kMaxDimension = 8;
inline constexpr double kDefaultPdTol = 1e-12;

/// Pairwise (tree) summation; fixed order for a given length.
cdouble pairwise_sum(std::span<const cdouble> values);
double pairwise_sum(std::span<const double> values);

double max_abs(const CMatrix& m);
CMatrix symmetrized(const CMatrix& m);
bool is_real(const CMatrix& m);

/// Eigenvalues of a real symmetric matrix by cyclic Jacobi rotations, ascending.
std::vector<double> symmetric_eigenvalues(RMatrix m);

/// True iff the symmetric part of Re(M) has smallest eigenvalue > tol·(1 + |tr Re M|/n).
bool re_pd_check(const CMatrix& m, double tol = kDefaultPdTol);

/// Determinant as log-magnitude plus a phase accumulated from LU pivot
/// arguments (and π for an odd row permutation). The phase is not reduced.
struct LogDet {
  double log_magnitude = 0.0;
  double phase = 0.0;

  cdouble value() const;
  /// det^p on the principal branch of the final complex number.
  cdouble power(double p) const;
};

LogDet logdet(const CMatrix& m);
cdouble determinant(const CMatrix& m);

/// General inverse by LU with partial pivoting. Throws SingularError on pivot underflow.
CMatrix inverse(const CMatrix& m);
/// Inverse of a symmetric matrix, symmetrized after the solve.
CMatrix inverse_symmetric(const CMatrix& m);

struct MatrixSqrt {
  CMatrix root;          // A^{1/2}
  CMatrix inverse_root;  // A^{-1/2}
  int iterations = 0;
  double residual = 0.0;  // ‖root² − A‖_max
};

/// Principal square root by scaled Denman–Beavers iteration. Requires no
/// eigenvalue on the closed negative real axis; throws ConvergenceError
/// (with the residual in the message) otherwise.
MatrixSqrt principal_sqrt(const CMatrix& m);

/// rᵀMr (no conjugation), pairwise-summed.
cdouble quad_form(const CMatrix& m, const CVector& r);

/// Complex symmetric n×n matrix with cached inverse, principal square and
/// fourth roots, and spectrally continuous determinant powers.
///
/// The regular constructor enforces Re Θ ≻ 0. `continued` admits any symmetric
/// matrix whose principal root exists (spectrum off the closed negative real
/// axis); it is how boundary cases such as purely imaginary Θ are reached.
class AnisotropyMatrix {
 public:
  explicit AnisotropyMatrix(const CMatrix& theta, double pd_tol = kDefaultPdTol);
  static AnisotropyMatrix continued(const CMatrix& theta);
  static AnisotropyMatrix identity(std::size_t n);
  static AnisotropyMatrix from_real(const RMatrix& theta);

  std::size_t dim() const noexcept { return static_cast<std::size_t>(theta_.rows()); }
  const CMatrix& matrix() const noexcept { return theta_; }
  const CMatrix& inverse() const noexcept { return inverse_; }
  const CMatrix& sqrt() const noexcept { return sqrt_; }
  const CMatrix& inverse_sqrt() const noexcept { return inverse_sqrt_; }

  /// |Θ|^{1/4} = det(Θ^{1/4})
  cdouble det_quarter() const noexcept { return det_quarter_; }
  /// |Θ|^{1/2} = det(Θ^{1/2})
  cdouble det_half() const noexcept { return det_quarter_ * det_quarter_; }
  cdouble det() const noexcept { return det_half() * det_half(); }

  bool is_real() const noexcept { return real_; }
  bool re_pd() const noexcept { return re_pd_; }

  /// Θ⁻¹, reusing the cached roots.
  AnisotropyMatrix inverted() const;
  /// Θ* (entrywise conjugate).
  AnisotropyMatrix conjugated() const;

 private:
  AnisotropyMatrix() = default;
  // Re-PD is enforced when pd_tol is set.
  void build(const CMatrix& theta, std::optional<double> pd_tol);

  CMatrix theta_, inverse_, sqrt_, inverse_sqrt_;
  cdouble det_quarter_{1.0, 0.0};
  bool real_ = true;
  bool re_pd_ = true;
};

}  // namespace ahg
