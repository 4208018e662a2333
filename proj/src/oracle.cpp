#include "ahg/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <utility>
#include <numbers>
#include <string>

namespace ahg {

namespace {

// Orthonormal Hermite recurrence without the Gaussian factor: returns
// (p_m(z), √(2m) p_{m−1}(z)), the value and derivative at z.
std::pair<double, double> hermite_orthonormal(int m, double z) {
  double p1 = std::pow(std::numbers::pi, -0.25), p2 = 0.0;
  for (int j = 0; j < m; ++j) {
    const double p3 = p2;
    p2 = p1;
    p1 = z * std::sqrt(2.0 / (j + 1)) * p2 - std::sqrt(static_cast<double>(j) / (j + 1)) * p3;
  }
  return {p1, std::sqrt(2.0 * m) * p2};
}

GaussHermite build_rule(int m) {
  // nodes seeded by the Jacobi matrix eigenvalues, then polished by Newton
  const auto mi = static_cast<Eigen::Index>(m);
  RMatrix jacobi = RMatrix::Zero(mi, mi);
  for (Eigen::Index k = 1; k < mi; ++k) jacobi(k, k - 1) = jacobi(k - 1, k) = std::sqrt(0.5 * static_cast<double>(k));
  const RVector seeds = Eigen::SelfAdjointEigenSolver<RMatrix>(jacobi, Eigen::EigenvaluesOnly).eigenvalues();

  GaussHermite out;
  out.nodes.resize(static_cast<std::size_t>(m));
  out.scaled_weights.resize(out.nodes.size());
  out.weights.resize(out.nodes.size());
  for (int i = m / 2; i < m; ++i) {
    double z = (m % 2 && i == m / 2) ? 0.0 : seeds(i);
    double pp = 0.0;
    for (int it = 0; it < 8; ++it) {
      const auto [p, dp] = hermite_orthonormal(m, z);
      pp = dp;
      const double step = p / dp;
      z -= step;
      if (std::abs(step) <= 1e-16 * std::max(1.0, std::abs(z))) break;
    }
    pp = hermite_orthonormal(m, z).second;
    // w e^{z²} = 2 / (p'(z) e^{−z²/2})², formed without overflow
    const double psi = pp * std::exp(-0.5 * z * z);
    const double ws = 2.0 / (psi * psi);
    const auto hi = static_cast<std::size_t>(i), lo = static_cast<std::size_t>(m - 1 - i);
    out.nodes[hi] = z;
    out.nodes[lo] = -z;
    out.scaled_weights[hi] = out.scaled_weights[lo] = ws;
  }
  for (std::size_t i = 0; i < out.nodes.size(); ++i) {
    if (!std::isfinite(out.scaled_weights[i]) || (i > 0 && !(out.nodes[i] > out.nodes[i - 1])))
      throw ConvergenceError("Gauss-Hermite node construction failed for m = " + std::to_string(m));
    out.weights[i] = out.scaled_weights[i] * std::exp(-out.nodes[i] * out.nodes[i]);
  }
  return out;
}

}  // namespace

GaussHermite gauss_hermite_rule(int m) {
  if (m < 2 || m > 256) throw UsageError("Gauss-Hermite node count must lie in [2, 256]");
  static std::mutex mutex;
  static std::map<int, GaussHermite> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(m);
  if (it == cache.end()) it = cache.emplace(m, build_rule(m)).first;
  return it->second;
}

QuadratureRule::QuadratureRule(int m, RMatrix whitening, RVector shift)
    : rule_(gauss_hermite_rule(m)), whitening_(std::move(whitening)), shift_(std::move(shift)) {
  const auto n = whitening_.rows();
  if (n == 0 || whitening_.cols() != n || shift_.size() != n) throw UsageError("quadrature whitening dimension mismatch");
  det_w_ = std::abs(whitening_.determinant());
  if (!(det_w_ > 0.0) || !std::isfinite(det_w_)) throw DomainError("quadrature whitening map is singular");
  size_ = 1;
  for (Eigen::Index k = 0; k < n; ++k) {
    if (size_ > std::size_t{1} << 28) throw ResourceError("tensor quadrature grid too large");
    size_ *= static_cast<std::size_t>(m);
  }
}

QuadratureRule::QuadratureRule(int m, RMatrix whitening)
    : QuadratureRule(m, whitening, RVector::Zero(whitening.rows())) {}

RVector QuadratureRule::node(std::size_t i) const {
  const auto n = whitening_.rows();
  const std::size_t m = rule_.nodes.size();
  RVector u(n);
  for (Eigen::Index k = n - 1; k >= 0; --k) {
    u(k) = rule_.nodes[i % m];
    i /= m;
  }
  return whitening_ * u + shift_;
}

double QuadratureRule::weight(std::size_t i) const {
  const std::size_t m = rule_.nodes.size();
  double w = det_w_;
  for (Eigen::Index k = 0; k < whitening_.rows(); ++k) {
    w *= rule_.scaled_weights[i % m];
    i /= m;
  }
  return w;
}

bool QuadratureRule::on_boundary(std::size_t i) const {
  const std::size_t m = rule_.nodes.size();
  for (Eigen::Index k = 0; k < whitening_.rows(); ++k) {
    const std::size_t j = i % m;
    if (j == 0 || j == m - 1) return true;
    i /= m;
  }
  return false;
}

cdouble QuadratureRule::sum(std::span<const cdouble> values) const {
  if (values.size() != size_) throw UsageError("value count does not match the quadrature grid");
  std::vector<cdouble> terms(size_);
  for (std::size_t i = 0; i < size_; ++i) terms[i] = weight(i) * values[i];
  return pairwise_sum(terms);
}

double QuadratureRule::tail_ratio(std::span<const cdouble> values) const {
  double peak = 0.0, tail = 0.0;
  for (std::size_t i = 0; i < size_; ++i) {
    const double a = std::abs(weight(i) * values[i]);
    peak = std::max(peak, a);
    if (on_boundary(i)) tail = std::max(tail, a);
  }
  return peak > 0.0 ? tail / peak : 0.0;
}

cdouble QuadratureRule::integrate(const Function& f) const {
  std::vector<cdouble> values(size_);
  for (std::size_t i = 0; i < size_; ++i) values[i] = f(node(i).cast<cdouble>());
  return sum(values);
}

RMatrix whitening_for(const RMatrix& p) {
  const RMatrix sym = 0.5 * (p + p.transpose());
  Eigen::SelfAdjointEigenSolver<RMatrix> es(sym);
  if (es.info() != Eigen::Success || es.eigenvalues().minCoeff() <= 0.0)
    throw ConvergenceError("integrand envelope does not decay (envelope matrix is not positive definite)");
  return es.eigenvectors() * es.eigenvalues().cwiseInverse().cwiseSqrt().asDiagonal() * es.eigenvectors().transpose();
}

RMatrix envelope_of(const AnisotropyMatrix& theta_hint) {
  const RMatrix re = theta_hint.inverse().real();
  return 0.5 * (re + re.transpose());
}

namespace {

std::vector<cdouble> sample(const QuadratureRule& rule, const Function& f) {
  std::vector<cdouble> v(rule.size());
  for (std::size_t i = 0; i < rule.size(); ++i) v[i] = f(rule.node(i).cast<cdouble>());
  return v;
}

QuadratureResult pair_integral(const Function& f, const Function& g, const AnisotropyMatrix& hint, int m,
                               bool conjugate) {
  const QuadratureRule rule(m, whitening_for(envelope_of(hint)));
  std::vector<cdouble> values(rule.size());
  for (std::size_t i = 0; i < rule.size(); ++i) {
    const CVector x = rule.node(i).cast<cdouble>();
    const cdouble gx = g(x);
    values[i] = f(x) * (conjugate ? std::conj(gx) : gx);
  }
  return {rule.sum(values), rule.tail_ratio(values)};
}

}  // namespace

QuadratureResult inner_product(const Function& f, const Function& g, const AnisotropyMatrix& theta_hint, int m) {
  return pair_integral(f, g, theta_hint, m, true);
}

QuadratureResult bilinear_product(const Function& f, const Function& g, const AnisotropyMatrix& theta_hint, int m) {
  return pair_integral(f, g, theta_hint, m, false);
}

CMatrix gram(const std::vector<Function>& fs, const std::vector<Function>& gs, const AnisotropyMatrix& theta_hint,
             int m, bool conjugate) {
  const QuadratureRule rule(m, whitening_for(envelope_of(theta_hint)));
  std::vector<std::vector<cdouble>> fv, gv;
  for (const auto& f : fs) fv.push_back(sample(rule, f));
  for (const auto& g : gs) {
    gv.push_back(sample(rule, g));
    if (conjugate)
      for (auto& v : gv.back()) v = std::conj(v);
  }
  CMatrix out(static_cast<Eigen::Index>(fs.size()), static_cast<Eigen::Index>(gs.size()));
  std::vector<cdouble> prod(rule.size());
  for (std::size_t j = 0; j < fs.size(); ++j) {
    for (std::size_t k = 0; k < gs.size(); ++k) {
      for (std::size_t i = 0; i < rule.size(); ++i) prod[i] = fv[j][i] * gv[k][i];
      out(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(k)) = rule.sum(prod);
    }
  }
  return out;
}

std::vector<MultiIndex> degrees_up_to(std::size_t n, int max_order) {
  if (n == 0) throw UsageError("dimension must be positive");
  if (max_order < 0) throw UsageError("maximum order must be non-negative");
  std::vector<MultiIndex> out;
  for (int order = 0; order <= max_order; ++order)
    for_each_colsum_matrix(MultiIndex{order}, n, [&](const MultiIndexMatrix& col) { out.push_back(col.row_sums()); });
  return out;
}

ExpansionResult expand(const Function& f, const AnisotropyMatrix& theta, int max_order, int m, Pairing pairing) {
  const bool conjugate =
      pairing == Pairing::Hermitian || (pairing == Pairing::Auto && theta.is_real());
  const QuadratureRule rule(m, whitening_for(envelope_of(theta)));
  const std::vector<cdouble> fv = sample(rule, f);

  std::map<MultiIndex, cdouble> coeffs;
  std::vector<cdouble> prod(rule.size());
  for (const MultiIndex& nu : degrees_up_to(theta.dim(), max_order)) {
    const AhgMode dual(theta, nu, true);
    for (std::size_t i = 0; i < rule.size(); ++i) {
      const cdouble d = dual(rule.node(i).cast<cdouble>());
      prod[i] = fv[i] * (conjugate ? std::conj(d) : d);
    }
    coeffs[nu] = rule.sum(prod);
  }
  ExpansionResult out{ModeExpansion(theta, coeffs), 0.0, 0.0};
  std::vector<cdouble> diff(rule.size());
  for (std::size_t i = 0; i < rule.size(); ++i) {
    const cdouble e = fv[i] - out.expansion(rule.node(i).cast<cdouble>());
    diff[i] = std::norm(e);
  }
  out.residual = std::sqrt(std::abs(rule.sum(diff)));
  out.tail_ratio = rule.tail_ratio(diff);
  return out;
}

namespace {

void check_step(double h) {
  if (!(h >= 1e-7 && h <= 1e-2)) throw UsageError("finite-difference step must lie in [1e-7, 1e-2]");
}

CVector bumped(const CVector& r, Eigen::Index k, double by) {
  CVector out = r;
  out(k) += by;
  return out;
}

}  // namespace

CVector fd_gradient(const Function& f, const CVector& r, double h) {
  check_step(h);
  CVector g(r.size());
  for (Eigen::Index k = 0; k < r.size(); ++k) g(k) = (f(bumped(r, k, h)) - f(bumped(r, k, -h))) / (2.0 * h);
  return g;
}

CMatrix fd_hessian(const Function& f, const CVector& r, double h) {
  check_step(h);
  const auto n = r.size();
  CMatrix out(n, n);
  const cdouble f0 = f(r);
  for (Eigen::Index j = 0; j < n; ++j) {
    out(j, j) = (f(bumped(r, j, h)) - 2.0 * f0 + f(bumped(r, j, -h))) / (h * h);
    for (Eigen::Index k = j + 1; k < n; ++k) {
      const CVector rp = bumped(r, j, h), rm = bumped(r, j, -h);
      const cdouble v =
          (f(bumped(rp, k, h)) - f(bumped(rp, k, -h)) - f(bumped(rm, k, h)) + f(bumped(rm, k, -h))) / (4.0 * h * h);
      out(j, k) = out(k, j) = v;
    }
  }
  return out;
}

cdouble fd_laplacian(const Function& f, const CVector& r, double h) {
  check_step(h);
  const cdouble f0 = f(r);
  cdouble acc = 0.0;
  for (Eigen::Index k = 0; k < r.size(); ++k) {
    acc += (-f(bumped(r, k, 2 * h)) + 16.0 * f(bumped(r, k, h)) - 30.0 * f0 + 16.0 * f(bumped(r, k, -h)) -
            f(bumped(r, k, -2 * h))) /
           (12.0 * h * h);
  }
  return acc;
}

}  // namespace ahg
