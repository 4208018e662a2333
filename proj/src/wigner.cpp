#include "ahg/wigner.hpp"

#include <cmath>
#include <numbers>

namespace ahg {

namespace {

constexpr cdouble kI{0.0, 1.0};

void require_real(const AnisotropyMatrix& theta) {
  if (!theta.is_real()) throw DomainError("the WVD closed form is unsupported for complex anisotropy matrices");
}

cdouble ipow(int k) {
  static const cdouble table[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return table[k % 4];
}

// (4ⁿπⁿ|Θ|)^{1/4} e^{−½ζᵀΘζ}
cdouble envelope(const AnisotropyMatrix& theta, const RVector& zeta) {
  const double n = static_cast<double>(theta.dim());
  const CVector z = zeta.cast<cdouble>();
  return std::pow(4.0 * std::numbers::pi, 0.25 * n) * theta.det_quarter() * std::exp(-0.5 * quad_form(theta.matrix(), z));
}

// Visits (τ, σ, α, weight) for one (ν, μ) pair of the kernel sum.
template <class Visit>
void for_each_pair_term(const MultiIndex& nu, const MultiIndex& mu, Visit&& visit) {
  for_each_below(nu, [&](const MultiIndex& tau) {
    const MultiIndex nu_tau = *nu.minus(tau);
    for_each_below(mu, [&](const MultiIndex& sigma) {
      const MultiIndex mu_sigma = *mu.minus(sigma);
      const MultiIndex alpha = nu_tau + mu_sigma;
      const double sign = mu_sigma.degree() % 2 ? -1.0 : 1.0;
      const double weight = sign * std::sqrt(binom(nu, tau) * binom(mu, sigma) * binom(alpha, nu_tau));
      visit(tau, sigma, alpha, weight);
    });
  });
}

}  // namespace

PhasePoint::PhasePoint(RVector r_, RVector zeta_) : r(std::move(r_)), zeta(std::move(zeta_)) {
  if (r.size() != zeta.size() || r.size() == 0) throw UsageError("phase point position and frequency lengths differ");
  if (!r.allFinite() || !zeta.allFinite()) throw UsageError("phase point has non-finite entries");
}

cdouble wvd_pair(const AnisotropyMatrix& theta, const MultiIndex& nu, const MultiIndex& mu, const PhasePoint& p) {
  require_real(theta);
  if (nu.size() != theta.dim() || mu.size() != theta.dim() || p.dim() != theta.dim())
    throw UsageError("WVD arguments have inconsistent dimensions");
  const AnisotropyMatrix inv = theta.inverted();
  const CVector r = p.r.cast<cdouble>(), z = p.zeta.cast<cdouble>();
  std::vector<cdouble> terms;
  for_each_pair_term(nu, mu, [&](const MultiIndex& tau, const MultiIndex& sigma, const MultiIndex& alpha, double w) {
    terms.push_back(w * ipow(alpha.degree()) * eval(theta, tau, r) * eval(theta, sigma, r) *
                    AhgMode(inv, alpha, true)(z));
  });
  return envelope(theta, p.zeta) * pairwise_sum(terms);
}

WvdExpansion::WvdExpansion(const ModeExpansion& f) : dim_(f.theta().dim()) {
  const AnisotropyMatrix& theta = f.theta();
  require_real(theta);
  if (f.argument_map() &&
      max_abs(*f.argument_map() - CMatrix::Identity(theta.matrix().rows(), theta.matrix().cols())) != 0.0)
    throw UsageError("WVD expansion requires modes evaluated at r itself");
  theta_ = theta.matrix().real();
  norm_ = std::pow(4.0 * std::numbers::pi, 0.25 * static_cast<double>(dim_)) * theta.det_quarter();
  const AnisotropyMatrix inv = theta.inverted();

  std::map<MultiIndex, std::size_t> low_index, dual_index;
  auto index_of = [](std::map<MultiIndex, std::size_t>& idx, std::vector<AhgMode>& modes, const MultiIndex& m,
                     auto&& make) {
    auto it = idx.find(m);
    if (it != idx.end()) return it->second;
    modes.push_back(make(m));
    return idx[m] = modes.size() - 1;
  };
  auto make_low = [&](const MultiIndex& m) { return AhgMode(theta, m); };
  auto make_dual = [&](const MultiIndex& m) { return AhgMode(inv, m, true); };

  std::vector<std::pair<MultiIndex, cdouble>> coeffs;
  for (const auto& [nu, a] : f.terms())
    if (a != 0.0) coeffs.emplace_back(nu, a);

  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    for (std::size_t j = i; j < coeffs.size(); ++j) {
      const auto& [nu, a] = coeffs[i];
      const auto& [mu, b] = coeffs[j];
      Pair pair{a * std::conj(b), i == j, {}};
      for_each_pair_term(nu, mu, [&](const MultiIndex& tau, const MultiIndex& sigma, const MultiIndex& alpha, double w) {
        pair.terms.push_back({index_of(low_index, low_modes_, tau, make_low),
                              index_of(low_index, low_modes_, sigma, make_low),
                              index_of(dual_index, dual_modes_, alpha, make_dual), w, alpha.degree()});
      });
      pairs_.push_back(std::move(pair));
    }
  }
}

cdouble WvdExpansion::operator()(const PhasePoint& p) const {
  if (p.dim() != dim_) throw UsageError("phase point dimension does not match the expansion");
  const CVector r = p.r.cast<cdouble>(), z = p.zeta.cast<cdouble>();
  std::vector<cdouble> low(low_modes_.size()), dual(dual_modes_.size());
  for (std::size_t k = 0; k < low.size(); ++k) low[k] = low_modes_[k](r);
  for (std::size_t k = 0; k < dual.size(); ++k) dual[k] = dual_modes_[k](z);

  std::vector<cdouble> contributions;
  contributions.reserve(pairs_.size());
  std::vector<cdouble> terms;
  for (const Pair& pair : pairs_) {
    terms.clear();
    for (const PairTerm& t : pair.terms)
      terms.push_back(t.weight * ipow(t.alpha_degree) * low[t.tau] * low[t.sigma] * dual[t.alpha]);
    const cdouble v = pair.coeff * pairwise_sum(terms);
    // the (μ, ν) term is the conjugate of the (ν, μ) term at real phase points
    contributions.push_back(pair.diagonal ? v : cdouble(2.0 * v.real(), 0.0));
  }
  const double q = p.zeta.dot(theta_ * p.zeta);
  return norm_ * std::exp(-0.5 * q) * pairwise_sum(contributions);
}

cdouble wvd_expansion(const ModeExpansion& f, const PhasePoint& p) { return WvdExpansion(f)(p); }

namespace {

QuadratureRule lag_rule(const AnisotropyMatrix& hint, int nodes) {
  // e^{−¼ξᵀPξ} with P = Re Θ⁻¹
  return QuadratureRule(nodes, whitening_for(0.25 * envelope_of(hint)));
}

cdouble fourier_sum(const QuadratureRule& rule, const std::vector<RVector>& xis, std::span<const cdouble> kernel,
                    const RVector& zeta) {
  std::vector<cdouble> values(kernel.size());
  for (std::size_t i = 0; i < kernel.size(); ++i) values[i] = kernel[i] * std::exp(-kI * xis[i].dot(zeta));
  return std::pow(2.0 * std::numbers::pi, -0.5 * static_cast<double>(zeta.size())) * rule.sum(values);
}

}  // namespace

cdouble wvd_cross_numeric(const Function& f, const Function& g, const PhasePoint& p,
                          const AnisotropyMatrix& envelope_hint, int nodes) {
  if (p.dim() != envelope_hint.dim()) throw UsageError("phase point dimension does not match the envelope");
  const QuadratureRule rule = lag_rule(envelope_hint, nodes);
  std::vector<RVector> xis(rule.size());
  std::vector<cdouble> kernel(rule.size());
  for (std::size_t i = 0; i < rule.size(); ++i) {
    xis[i] = rule.node(i);
    kernel[i] = f((p.r - 0.5 * xis[i]).cast<cdouble>()) * g((p.r + 0.5 * xis[i]).cast<cdouble>());
  }
  return fourier_sum(rule, xis, kernel, p.zeta);
}

cdouble wvd_numeric(const Function& f, const PhasePoint& p, const AnisotropyMatrix& envelope_hint, int nodes) {
  auto fc = [&](const CVector& x) { return std::conj(f(x)); };
  return wvd_cross_numeric(f, fc, p, envelope_hint, nodes);
}

CMatrix wvd_numeric_grid(const Function& f, const std::vector<RVector>& rs, const std::vector<RVector>& zetas,
                         const AnisotropyMatrix& envelope_hint, int nodes) {
  const QuadratureRule rule = lag_rule(envelope_hint, nodes);
  std::vector<RVector> xis(rule.size());
  for (std::size_t i = 0; i < rule.size(); ++i) xis[i] = rule.node(i);
  CMatrix out(static_cast<Eigen::Index>(rs.size()), static_cast<Eigen::Index>(zetas.size()));
  std::vector<cdouble> kernel(rule.size());
  for (std::size_t a = 0; a < rs.size(); ++a) {
    if (static_cast<std::size_t>(rs[a].size()) != envelope_hint.dim())
      throw UsageError("phase point dimension does not match the envelope");
    for (std::size_t i = 0; i < rule.size(); ++i)
      kernel[i] = f((rs[a] - 0.5 * xis[i]).cast<cdouble>()) * std::conj(f((rs[a] + 0.5 * xis[i]).cast<cdouble>()));
    for (std::size_t b = 0; b < zetas.size(); ++b)
      out(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) = fourier_sum(rule, xis, kernel, zetas[b]);
  }
  return out;
}

double wvd_marginal_constant(std::size_t n) { return std::pow(2.0 * std::numbers::pi, 0.5 * static_cast<double>(n)); }

}  // namespace ahg
