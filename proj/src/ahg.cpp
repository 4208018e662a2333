#include "ahg/ahg.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "ahg/hermite1d.hpp"

namespace ahg {

namespace {

void check_dim(std::size_t n, const CVector& r) {
  if (static_cast<std::size_t>(r.size()) != n) throw UsageError("argument dimension does not match the mode");
}

void check_mode_dims(const AnisotropyMatrix& theta, const MultiIndex& nu) {
  if (nu.size() != theta.dim()) throw UsageError("degree length does not match the anisotropy dimension");
}

void check_expansion_degree(const MultiIndex& nu) {
  if (nu.degree() > kMaxExpansionDegree)
    throw ResourceError("expansion degree " + std::to_string(nu.degree()) + " exceeds the limit of " +
                        std::to_string(kMaxExpansionDegree));
}

// (πⁿ|Θ|)^{1/4}
cdouble gaussian_norm(const AnisotropyMatrix& theta) {
  return std::pow(std::numbers::pi, 0.25 * static_cast<double>(theta.dim())) * theta.det_quarter();
}

}  // namespace

std::map<MultiIndex, cdouble> reexpansion_coefficients(const CMatrix& t, const MultiIndex& nu) {
  const std::size_t n = nu.size();
  if (static_cast<std::size_t>(t.rows()) != n || t.rows() != t.cols())
    throw UsageError("re-expansion matrix dimension mismatch");
  CMatrix log_t(t.rows(), t.cols());
  for (Eigen::Index j = 0; j < t.rows(); ++j)
    for (Eigen::Index k = 0; k < t.cols(); ++k) log_t(j, k) = t(j, k) == 0.0 ? cdouble(0.0) : std::log(t(j, k));
  const double half_nu_fact = 0.5 * factorial_log(nu);

  std::map<MultiIndex, cdouble> out;
  for_each_colsum_matrix(nu, n, [&](const MultiIndexMatrix& omega) {
    cdouble log_term = half_nu_fact - omega.factorial_log();
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        const int w = omega(j, k);
        if (w == 0) continue;
        if (t(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(k)) == 0.0) return;  // 0^w
        log_term += static_cast<double>(w) * log_t(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(k));
      }
    }
    const MultiIndex mu = omega.row_sums();
    log_term += 0.5 * factorial_log(mu);
    out[mu] += std::exp(log_term);
  });
  return out;
}

// ---------------------------------------------------------------------------
// AhgMode

AhgMode::AhgMode(const AnisotropyMatrix& theta, const MultiIndex& nu, bool dual) {
  check_mode_dims(theta, nu);
  if (!dual) {
    build_primal(theta, nu);
    return;
  }
  // H̃G^Θ_ν(r) = |Θ|^{-1/2} HG^{Θ⁻¹}_ν(Θ⁻¹r)
  build_primal(theta.inverted(), nu);
  arg_map_ = arg_map_ * theta.inverse();
  scale_ /= theta.det_half();
  dual_ = true;
}

void AhgMode::build_primal(const AnisotropyMatrix& theta, const MultiIndex& nu) {
  dim_ = theta.dim();
  nu_ = nu;
  arg_map_ = theta.inverse_sqrt();
  scale_ = 1.0 / theta.det_quarter();
  int longest = 0;
  for (auto& [mu, c] : reexpansion_coefficients(theta.inverse_sqrt(), nu)) {
    if (c == 0.0) continue;
    for (int v : mu.entries()) longest = std::max(longest, v);
    terms_.push_back({std::vector<int>(mu.entries().begin(), mu.entries().end()), c});
  }
  table_len_ = longest + 1;
}

AhgMode AhgMode::zero(std::size_t n) {
  AhgMode m;
  m.dim_ = n;
  return m;
}

AhgMode AhgMode::lowered(const AnisotropyMatrix& theta, const MultiIndex& nu, std::size_t k, int by) {
  auto low = nu.lowered(k, by);
  if (!low) return zero(theta.dim());
  return AhgMode(theta, *low);
}

AhgMode AhgMode::lowered2(const AnisotropyMatrix& theta, const MultiIndex& nu, std::size_t j, std::size_t k) {
  auto low = nu.lowered(j);
  if (low) low = low->lowered(k);
  if (!low) return zero(theta.dim());
  return AhgMode(theta, *low);
}

cdouble AhgMode::operator()(const CVector& r) const {
  check_dim(dim_, r);
  if (terms_.empty()) return 0.0;
  const CVector s = arg_map_ * r;
  const std::size_t len = static_cast<std::size_t>(table_len_);
  std::vector<cdouble> table(dim_ * len);
  for (std::size_t k = 0; k < dim_; ++k)
    hg1_table(s(static_cast<Eigen::Index>(k)), std::span<cdouble>(table.data() + k * len, len));
  cdouble acc = 0.0;
  for (const Term& t : terms_) {
    cdouble prod = t.coeff;
    for (std::size_t k = 0; k < dim_; ++k) prod *= table[k * len + static_cast<std::size_t>(t.mu[k])];
    acc += prod;
  }
  return scale_ * acc;
}

cdouble eval(const AnisotropyMatrix& theta, const MultiIndex& nu, const CVector& r) {
  return AhgMode(theta, nu)(r);
}

cdouble eval_dual(const AnisotropyMatrix& theta, const MultiIndex& nu, const CVector& r) {
  return AhgMode(theta, nu, true)(r);
}

// ---------------------------------------------------------------------------
// Generating function

cdouble generating_sum(const AnisotropyMatrix& theta, const CVector& x, const CVector& r, int max_order, bool dual) {
  const std::size_t n = theta.dim();
  check_dim(n, x);
  check_dim(n, r);
  cdouble acc = 0.0;
  for (int order = 0; order <= max_order; ++order) {
    // all ν with |ν| = order
    for_each_colsum_matrix(MultiIndex{order}, n, [&](const MultiIndexMatrix& col) {
      const MultiIndex nu = col.row_sums();
      cdouble weight = std::exp(0.5 * (order * std::numbers::ln2 - factorial_log(nu)));
      for (std::size_t k = 0; k < n; ++k) weight *= std::pow(x(static_cast<Eigen::Index>(k)), nu[k]);
      if (weight == 0.0) return;
      acc += weight * AhgMode(theta, nu, dual)(r);
    });
  }
  return acc;
}

cdouble generating_closed(const AnisotropyMatrix& theta, const CVector& x, const CVector& r, bool dual) {
  const std::size_t n = theta.dim();
  check_dim(n, x);
  check_dim(n, r);
  const CMatrix& q = theta.inverse();
  cdouble exponent = -0.5 * quad_form(q, r);
  if (dual)
    exponent += (x.transpose() * (2.0 * r - theta.matrix() * x))(0);
  else
    exponent += (x.transpose() * q * (2.0 * r - x))(0);
  return std::exp(exponent) / gaussian_norm(theta);
}

// ---------------------------------------------------------------------------
// Value at zero

cdouble eval_at_zero(const AnisotropyMatrix& theta, const MultiIndex& nu) {
  check_mode_dims(theta, nu);
  const std::size_t n = theta.dim();
  const CMatrix& t = theta.inverse_sqrt();
  cdouble acc = 0.0;
  for_each_colsum_matrix(nu, n, [&](const MultiIndexMatrix& omega) {
    const MultiIndex mu = omega.row_sums();
    for (int v : mu.entries())
      if (v % 2) return;
    cdouble term = std::exp(cdouble(-omega.factorial_log()));
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (omega(j, k)) term *= std::pow(t(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(k)), omega(j, k));
    std::vector<int> mu_minus_one(n);
    for (std::size_t k = 0; k < n; ++k) mu_minus_one[k] = mu[k] - 1;
    // i^{|μ|} with |μ| even
    const double phase = (mu.degree() / 2) % 2 == 0 ? 1.0 : -1.0;
    acc += term * phase * double_factorial(mu_minus_one);
  });
  return std::exp(0.5 * factorial_log(nu)) * acc / gaussian_norm(theta);
}

// ---------------------------------------------------------------------------
// Derivatives

CVector lowering_vector(const AnisotropyMatrix& theta, const MultiIndex& nu, const CVector& r) {
  check_mode_dims(theta, nu);
  const std::size_t n = theta.dim();
  CVector phi = CVector::Zero(static_cast<Eigen::Index>(n));
  for (std::size_t k = 0; k < n; ++k) {
    if (nu[k] == 0) continue;
    phi(static_cast<Eigen::Index>(k)) = std::sqrt(0.5 * nu[k]) * AhgMode::lowered(theta, nu, k)(r);
  }
  return phi;
}

CMatrix lowering_matrix(const AnisotropyMatrix& theta, const MultiIndex& nu, const CVector& r) {
  check_mode_dims(theta, nu);
  const std::size_t n = theta.dim();
  const auto ni = static_cast<Eigen::Index>(n);
  CMatrix phi = CMatrix::Zero(ni, ni);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = j; k < n; ++k) {
      const double w = j == k ? std::sqrt(static_cast<double>(nu[j]) * (nu[j] - 1)) : std::sqrt(1.0 * nu[j] * nu[k]);
      if (w == 0.0 || std::isnan(w)) continue;
      const cdouble v = w * AhgMode::lowered2(theta, nu, j, k)(r);
      phi(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(k)) = v;
      phi(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(j)) = v;
    }
  }
  return phi;
}

cdouble partial(const AnisotropyMatrix& theta, const MultiIndex& nu, const CVector& r, std::size_t j) {
  if (j >= theta.dim()) throw UsageError("partial derivative index out of range");
  return gradient(theta, nu, r)(static_cast<Eigen::Index>(j));
}

CVector gradient(const AnisotropyMatrix& theta, const MultiIndex& nu, const CVector& r) {
  check_dim(theta.dim(), r);
  const cdouble value = eval(theta, nu, r);
  return theta.inverse() * (2.0 * lowering_vector(theta, nu, r) - r * value);
}

CMatrix hessian(const AnisotropyMatrix& theta, const MultiIndex& nu, const CVector& r) {
  check_dim(theta.dim(), r);
  const CMatrix& q = theta.inverse();
  const cdouble value = eval(theta, nu, r);
  const CVector phi = lowering_vector(theta, nu, r);
  const CMatrix big_phi = lowering_matrix(theta, nu, r);
  const CMatrix inner =
      big_phi - r * phi.transpose() - phi * r.transpose() + 0.5 * value * (r * r.transpose());
  return symmetrized(-q * value + 2.0 * q * inner * q);
}

cdouble laplacian(const AnisotropyMatrix& theta, const MultiIndex& nu, const CVector& r) {
  check_dim(theta.dim(), r);
  const CMatrix& q = theta.inverse();
  const cdouble value = eval(theta, nu, r);
  const CVector phi = lowering_vector(theta, nu, r);
  const CMatrix big_phi = lowering_matrix(theta, nu, r);
  const CVector qr = q * r;
  return -value * q.trace() + 2.0 * (q * q * big_phi).trace() +
         (qr.transpose() * (value * qr - 4.0 * (q * phi)))(0);
}

// ---------------------------------------------------------------------------
// Expansions

ModeExpansion::ModeExpansion(AnisotropyMatrix theta, std::map<MultiIndex, cdouble> terms,
                             std::optional<CMatrix> argument_map)
    : theta_(std::move(theta)), terms_(std::move(terms)), argument_map_(std::move(argument_map)) {
  const auto n = static_cast<Eigen::Index>(theta_.dim());
  if (argument_map_ && (argument_map_->rows() != n || argument_map_->cols() != n))
    throw UsageError("argument map dimension mismatch");
  for (const auto& [mu, c] : terms_) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) throw DomainError("non-finite expansion coefficient");
    modes_.emplace_back(AhgMode(theta_, mu), c);
  }
}

cdouble ModeExpansion::operator()(const CVector& r) const {
  const CVector arg = argument_map_ ? CVector(*argument_map_ * r) : r;
  cdouble acc = 0.0;
  for (const auto& [mode, c] : modes_) acc += c * mode(arg);
  return acc;
}

cdouble ModeExpansion::coefficient(const MultiIndex& mu) const {
  auto it = terms_.find(mu);
  return it == terms_.end() ? cdouble(0.0) : it->second;
}

int ModeExpansion::max_degree() const {
  int d = 0;
  for (const auto& [mu, c] : terms_) d = std::max(d, mu.degree());
  return d;
}

ModeExpansion anisotropy_transform(const AnisotropyMatrix& theta1, const AnisotropyMatrix& theta2,
                                   const MultiIndex& nu) {
  check_mode_dims(theta1, nu);
  if (theta1.dim() != theta2.dim()) throw UsageError("anisotropy dimensions differ");
  check_expansion_degree(nu);
  const CMatrix t = theta2.sqrt() * theta1.inverse_sqrt();
  // |T|^{1/2} = |Θ₂|^{1/4} |Θ₁|^{-1/4}
  const cdouble root_det_t = theta2.det_quarter() / theta1.det_quarter();
  auto terms = reexpansion_coefficients(t, nu);
  for (auto& [mu, c] : terms) c *= root_det_t;
  return ModeExpansion(theta2, std::move(terms), t);
}

OffsetExpansion::OffsetExpansion(const AnisotropyMatrix& theta, const MultiIndex& nu, const CVector& s)
    : theta_inv_(theta.inverse()), s_(s) {
  check_mode_dims(theta, nu);
  check_dim(theta.dim(), s);
  check_expansion_degree(nu);
  prefactor_ = std::exp(-0.5 * nu.degree() * std::numbers::ln2) * gaussian_norm(theta);
  const CVector s2 = std::numbers::sqrt2 * s;
  for_each_below(nu, [&](const MultiIndex& mu) {
    const cdouble fixed = std::sqrt(binom(nu, mu)) * AhgMode(theta, mu)(s2);
    terms_.emplace_back(AhgMode(theta, *nu.minus(mu)), fixed);
  });
}

cdouble OffsetExpansion::operator()(const CVector& r) const {
  if (r.size() != s_.size()) throw UsageError("argument dimension does not match the mode");
  const CVector r2 = std::numbers::sqrt2 * r;
  cdouble acc = 0.0;
  for (const auto& [mode, fixed] : terms_) acc += fixed * mode(r2);
  return prefactor_ * std::exp(0.5 * quad_form(theta_inv_, r - s_)) * acc;
}

OffsetExpansion offset_expansion(const AnisotropyMatrix& theta, const MultiIndex& nu, const CVector& s) {
  return OffsetExpansion(theta, nu, s);
}

namespace {

ModeExpansion product_series(const AnisotropyMatrix& theta, const MultiIndex& nu, const MultiIndex& mu) {
  check_mode_dims(theta, nu);
  check_mode_dims(theta, mu);
  check_expansion_degree(nu);
  check_expansion_degree(mu);
  const std::size_t n = theta.dim();
  const CMatrix two_q = 2.0 * theta.inverse();
  const double log_outer =
      0.5 * (factorial_log(nu) + factorial_log(mu) - (nu.degree() + mu.degree()) * std::numbers::ln2);
  const cdouble outer = std::exp(log_outer) / gaussian_norm(theta);

  std::map<MultiIndex, cdouble> terms;
  for (const ProductTerm& pt : enumerate_product_matrices(nu, mu)) {
    const MultiIndex alpha = pt.beta + pt.gamma;
    cdouble log_term = 0.5 * (alpha.degree() * std::numbers::ln2 + factorial_log(alpha)) -
                       pt.omega.factorial_log() - factorial_log(pt.beta) - factorial_log(pt.gamma);
    bool vanishes = false;
    for (std::size_t j = 0; j < n && !vanishes; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        const int w = pt.omega(j, k);
        if (w == 0) continue;
        const cdouble q = two_q(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(k));
        if (q == 0.0) {
          vanishes = true;
          break;
        }
        log_term += static_cast<double>(w) * std::log(q);
      }
    }
    if (vanishes) continue;
    terms[alpha] += outer * std::exp(log_term);
  }
  return ModeExpansion(theta, std::move(terms));
}

}  // namespace

ProductExpansion::ProductExpansion(const AnisotropyMatrix& theta, const MultiIndex& nu, const MultiIndex& mu)
    : theta_inv_(theta.inverse()), series_(product_series(theta, nu, mu)) {}

cdouble ProductExpansion::operator()(const CVector& r) const {
  return std::exp(-0.5 * quad_form(theta_inv_, r)) * series_(r);
}

ProductExpansion product_expansion(const AnisotropyMatrix& theta, const MultiIndex& nu, const MultiIndex& mu) {
  return ProductExpansion(theta, nu, mu);
}

}  // namespace ahg
