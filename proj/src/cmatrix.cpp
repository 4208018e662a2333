#include "ahg/cmatrix.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace ahg {

namespace {

template <class T>
T pairwise(std::span<const T> v) {
  if (v.size() <= 8) {
    T acc{};
    for (const T& x : v) acc += x;
    return acc;
  }
  const std::size_t half = v.size() / 2;
  return pairwise(v.first(half)) + pairwise(v.subspan(half));
}

void check_square(const CMatrix& m) {
  if (m.rows() != m.cols()) throw UsageError("matrix must be square");
}

// Pivots below this fraction of the largest pivot are treated as zero.
constexpr double kPivotFloor = 1e-15;

}  // namespace

cdouble pairwise_sum(std::span<const cdouble> values) { return pairwise(values); }
double pairwise_sum(std::span<const double> values) { return pairwise(values); }

double max_abs(const CMatrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

CMatrix symmetrized(const CMatrix& m) {
  check_square(m);
  return 0.5 * (m + m.transpose());
}

bool is_real(const CMatrix& m) { return m.imag().cwiseAbs().maxCoeff() == 0.0; }

std::vector<double> symmetric_eigenvalues(RMatrix a) {
  const Eigen::Index n = a.rows();
  if (a.cols() != n) throw UsageError("matrix must be square");
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (Eigen::Index p = 0; p < n; ++p)
      for (Eigen::Index q = p + 1; q < n; ++q) off += a(p, q) * a(p, q);
    if (off <= 1e-30 * std::max(1.0, a.squaredNorm())) break;
    for (Eigen::Index p = 0; p < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        if (a(p, q) == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * a(p, q));
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (Eigen::Index k = 0; k < n; ++k) {
          const double akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (Eigen::Index k = 0; k < n; ++k) {
          const double apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
      }
    }
  }
  std::vector<double> ev(static_cast<std::size_t>(n));
  for (Eigen::Index k = 0; k < n; ++k) ev[static_cast<std::size_t>(k)] = a(k, k);
  std::sort(ev.begin(), ev.end());
  return ev;
}

bool re_pd_check(const CMatrix& m, double tol) {
  check_square(m);
  const RMatrix re = 0.5 * (m.real() + m.real().transpose());
  const auto ev = symmetric_eigenvalues(re);
  const double n = static_cast<double>(m.rows());
  return ev.front() > tol * (1.0 + std::abs(re.trace()) / n);
}

cdouble LogDet::value() const { return std::exp(cdouble(log_magnitude, phase)); }

cdouble LogDet::power(double p) const {
  const double reduced = std::arg(std::polar(1.0, phase));
  return std::exp(p * cdouble(log_magnitude, reduced));
}

LogDet logdet(const CMatrix& m) {
  check_square(m);
  Eigen::PartialPivLU<CMatrix> lu(m);
  const CMatrix& f = lu.matrixLU();
  double biggest = 0.0;
  for (Eigen::Index k = 0; k < f.rows(); ++k) biggest = std::max(biggest, std::abs(f(k, k)));
  LogDet out;
  for (Eigen::Index k = 0; k < f.rows(); ++k) {
    const double mag = std::abs(f(k, k));
    if (mag == 0.0 || mag <= kPivotFloor * biggest) throw SingularError("matrix is singular");
    out.log_magnitude += std::log(mag);
    out.phase += std::arg(f(k, k));
  }
  if (lu.permutationP().determinant() < 0) out.phase += std::numbers::pi;
  return out;
}

cdouble determinant(const CMatrix& m) {
  if (m.rows() == 0) return 1.0;
  return logdet(m).value();
}

CMatrix inverse(const CMatrix& m) {
  check_square(m);
  Eigen::PartialPivLU<CMatrix> lu(m);
  const CMatrix& f = lu.matrixLU();
  double biggest = 0.0;
  for (Eigen::Index k = 0; k < f.rows(); ++k) biggest = std::max(biggest, std::abs(f(k, k)));
  for (Eigen::Index k = 0; k < f.rows(); ++k) {
    const double mag = std::abs(f(k, k));
    if (mag == 0.0 || mag <= kPivotFloor * biggest) throw SingularError("matrix is singular (pivot underflow)");
  }
  return lu.inverse();
}

CMatrix inverse_symmetric(const CMatrix& m) { return symmetrized(inverse(m)); }

MatrixSqrt principal_sqrt(const CMatrix& a) {
  check_square(a);
  const Eigen::Index n = a.rows();
  const double scale = std::max(max_abs(a), std::numeric_limits<double>::min());
  const double tol = 1e-14 * scale;
  CMatrix y = a;
  CMatrix z = CMatrix::Identity(n, n);
  double prev = std::numeric_limits<double>::infinity();
  bool converged = false;
  int it = 0;
  for (it = 1; it <= 60; ++it) {
    double mu = 1.0;
    CMatrix yinv, zinv;
    try {
      yinv = inverse(y);
      zinv = inverse(z);
    } catch (const SingularError&) {
      break;
    }
    // determinant scaling only while far from convergence
    if (prev > 1e-2 * scale) {
      const double logmag = logdet(y).log_magnitude + logdet(z).log_magnitude;
      mu = std::exp(-logmag / (2.0 * static_cast<double>(n)));
    }
    CMatrix ynew = 0.5 * (mu * y + zinv / mu);
    CMatrix znew = 0.5 * (mu * z + yinv / mu);
    const double delta = max_abs(ynew - y);
    y = std::move(ynew);
    z = std::move(znew);
    if (!std::isfinite(delta)) break;
    if (delta <= tol || (delta < 1e-9 * scale && delta >= prev)) {
      converged = true;
      break;
    }
    prev = delta;
  }
  MatrixSqrt out;
  out.iterations = it;
  const bool symmetric = max_abs(a - a.transpose()) == 0.0;
  out.root = symmetric ? symmetrized(y) : y;
  out.inverse_root = symmetric ? symmetrized(z) : z;
  out.residual = max_abs(out.root * out.root - a);
  if (!converged || !(out.residual <= 1e-11 * scale)) {
    std::ostringstream os;
    os << "principal square root did not converge after " << it << " iterations (residual " << out.residual
       << ")";
    throw ConvergenceError(os.str());
  }
  return out;
}

cdouble quad_form(const CMatrix& m, const CVector& r) {
  check_square(m);
  if (m.rows() != r.size()) throw UsageError("quad_form dimension mismatch");
  std::vector<cdouble> terms;
  terms.reserve(static_cast<std::size_t>(m.size()));
  for (Eigen::Index j = 0; j < m.rows(); ++j)
    for (Eigen::Index k = 0; k < m.cols(); ++k) terms.push_back(r(j) * m(j, k) * r(k));
  return pairwise_sum(terms);
}

AnisotropyMatrix::AnisotropyMatrix(const CMatrix& theta, double pd_tol) { build(theta, pd_tol); }

AnisotropyMatrix AnisotropyMatrix::continued(const CMatrix& theta) {
  AnisotropyMatrix out;
  out.build(theta, std::nullopt);
  return out;
}

AnisotropyMatrix AnisotropyMatrix::identity(std::size_t n) {
  return AnisotropyMatrix(CMatrix::Identity(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n)));
}

AnisotropyMatrix AnisotropyMatrix::from_real(const RMatrix& theta) { return AnisotropyMatrix(theta.cast<cdouble>()); }

void AnisotropyMatrix::build(const CMatrix& theta, std::optional<double> pd_tol) {
  check_square(theta);
  if (theta.rows() == 0 || static_cast<std::size_t>(theta.rows()) > kMaxDimension)
    throw UsageError("anisotropy dimension must be between 1 and " + std::to_string(kMaxDimension));
  if (!theta.allFinite()) throw UsageError("anisotropy matrix has non-finite entries");
  if (max_abs(theta - theta.transpose()) > 1e-12 * std::max(1.0, max_abs(theta)))
    throw DomainError("anisotropy matrix must be symmetric");
  theta_ = symmetrized(theta);
  re_pd_ = re_pd_check(theta_);
  if (pd_tol && !re_pd_check(theta_, *pd_tol))
    throw DomainError("anisotropy matrix must have a positive definite real part");
  if (!pd_tol) {
    // principal roots need every eigenvalue off the closed negative real axis
    const Eigen::ComplexEigenSolver<CMatrix> es(theta_, false);
    const double scale = std::max(1.0, max_abs(theta_));
    for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k) {
      const cdouble ev = es.eigenvalues()(k);
      if (ev.real() <= 1e-14 * scale && std::abs(ev.imag()) <= 1e-14 * scale)
        throw DomainError("anisotropy matrix has an eigenvalue on the closed negative real axis");
    }
  }
  inverse_ = inverse_symmetric(theta_);
  const MatrixSqrt half = principal_sqrt(theta_);
  sqrt_ = half.root;
  inverse_sqrt_ = half.inverse_root;
  const MatrixSqrt quarter = principal_sqrt(sqrt_);
  det_quarter_ = determinant(quarter.root);
  real_ = ahg::is_real(theta_);
  if (real_) {
    // keep real matrices exactly real
    inverse_ = inverse_.real().cast<cdouble>();
    sqrt_ = sqrt_.real().cast<cdouble>();
    inverse_sqrt_ = inverse_sqrt_.real().cast<cdouble>();
    det_quarter_ = det_quarter_.real();
  }
}

AnisotropyMatrix AnisotropyMatrix::inverted() const {
  AnisotropyMatrix out;
  out.theta_ = inverse_;
  out.inverse_ = theta_;
  out.sqrt_ = inverse_sqrt_;
  out.inverse_sqrt_ = sqrt_;
  out.det_quarter_ = 1.0 / det_quarter_;
  out.real_ = real_;
  out.re_pd_ = re_pd_;
  return out;
}

AnisotropyMatrix AnisotropyMatrix::conjugated() const {
  AnisotropyMatrix out;
  out.theta_ = theta_.conjugate();
  out.inverse_ = inverse_.conjugate();
  out.sqrt_ = sqrt_.conjugate();
  out.inverse_sqrt_ = inverse_sqrt_.conjugate();
  out.det_quarter_ = std::conj(det_quarter_);
  out.real_ = real_;
  out.re_pd_ = re_pd_;
  return out;
}

}  // namespace ahg
