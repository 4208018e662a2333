#include "ahg/transforms.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "ahg/hermite1d.hpp"

namespace ahg {

namespace {

constexpr cdouble kI{0.0, 1.0};

bool all_real(std::initializer_list<cdouble> xs) {
  for (cdouble x : xs)
    if (x.imag() != 0.0) return false;
  return true;
}

CMatrix identity(std::size_t n) {
  return CMatrix::Identity(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
}

cdouble ipow(cdouble z, int k) {
  cdouble out = 1.0;
  for (int j = 0; j < k; ++j) out *= z;
  return out;
}

// Builds an anisotropy-like matrix for Σ or Ξ, translating failures into a
// domain error that names the matrix.
AnisotropyMatrix named_matrix(const CMatrix& m, const char* name, bool require_re_pd) {
  try {
    return require_re_pd ? AnisotropyMatrix(m) : AnisotropyMatrix::continued(m);
  } catch (const UsageError&) {
    throw;
  } catch (const Error& e) {
    throw DomainError(std::string(name) + " does not have a positive definite real part (" + e.what() + ")");
  }
}

// ∫ g(r) dr for an integrand with envelope e^{−½rᵀPr + ℓ·r}.
cdouble enveloped_integral(const Function& g, const RMatrix& p, const RVector& ell, int nodes) {
  const RMatrix w = whitening_for(0.5 * p);
  const RVector shift = Eigen::PartialPivLU<RMatrix>(p).solve(ell);
  const QuadratureRule rule(nodes, w, shift);
  return rule.integrate(g);
}

}  // namespace

// ---------------------------------------------------------------------------

LctParams::LctParams(cdouble a_, cdouble b_, cdouble c_, cdouble d_) : a(a_), b(b_), c(c_), d(d_) {
  for (cdouble x : {a, b, c, d})
    if (!std::isfinite(x.real()) || !std::isfinite(x.imag())) throw UsageError("LCT parameters must be finite");
  if (std::abs(a * d - b * c - 1.0) > 1e-12) throw DomainError("LCT parameter matrix must have unit determinant");
}

LctParams LctParams::ft() { return {0.0, 1.0, -1.0, 0.0}; }

LctParams LctParams::frft(double gamma) {
  const double c = std::cos(gamma), s = std::sin(gamma);
  return {c, s, -s, c};
}

LctParams LctParams::laplace() { return {0.0, kI, kI, 0.0}; }

bool LctParams::is_real() const noexcept { return all_real({a, b, c, d}); }

std::string LctParams::to_string() const {
  std::ostringstream os;
  os << "[" << a << " " << b << "; " << c << " " << d << "]";
  return os.str();
}

// ---------------------------------------------------------------------------

TransformedMode::TransformedMode(cdouble prefactor, CMatrix quad_matrix, CMatrix arg_map, AhgMode mode)
    : prefactor_(prefactor), quad_(std::move(quad_matrix)), arg_map_(std::move(arg_map)), mode_(std::move(mode)) {
  quad_zero_ = quad_.size() == 0 || max_abs(quad_) == 0.0;
}

cdouble TransformedMode::operator()(const CVector& zeta) const {
  if (zeta.size() != arg_map_.cols()) throw UsageError("argument dimension does not match the transform");
  const CVector xi_arg = arg_map_ * zeta;
  const cdouble q = quad_zero_ ? cdouble(0.0) : quad_form(quad_, xi_arg);
  return prefactor_ * std::exp(-0.5 * q) * mode_(xi_arg);
}

TransformedMode TransformedMode::scaled(cdouble factor) const {
  TransformedMode out = *this;
  out.prefactor_ *= factor;
  return out;
}

// ---------------------------------------------------------------------------

cdouble lct_numeric(const LctParams& a, const Function& f, const CVector& zeta, const AnisotropyMatrix& envelope_hint,
                    int nodes) {
  const std::size_t n = envelope_hint.dim();
  if (static_cast<std::size_t>(zeta.size()) != n) throw UsageError("argument dimension does not match the envelope");
  if (a.b == 0.0) throw DomainError("the LCT integral requires b != 0");
  const cdouble ab = a.a / a.b;
  // |f e^{chirp}| ~ e^{−½rᵀ(Re Θ⁻¹ + Im(a/b) I)r + ℓ·r}
  const RMatrix p = envelope_of(envelope_hint) + ab.imag() * RMatrix::Identity(zeta.size(), zeta.size());
  const RVector ell = (-kI * zeta / a.b).real();
  auto g = [&](const CVector& r) {
    const cdouble phase = -kI / (2.0 * a.b) * (2.0 * (r.transpose() * zeta)(0) - a.a * (r.transpose() * r)(0));
    return f(r) * std::exp(phase);
  };
  const cdouble integral = enveloped_integral(g, p, ell, nodes);
  const cdouble zz = (zeta.transpose() * zeta)(0);
  return std::pow(1.0 / (2.0 * std::numbers::pi * kI * a.b), 0.5 * static_cast<double>(n)) *
         std::exp(kI * a.d / (2.0 * a.b) * zz) * integral;
}

cdouble laplace_numeric(const Function& f, const CVector& zeta, const AnisotropyMatrix& envelope_hint, int nodes) {
  if (static_cast<std::size_t>(zeta.size()) != envelope_hint.dim())
    throw UsageError("argument dimension does not match the envelope");
  const RVector ell = -zeta.real();
  auto g = [&](const CVector& r) { return f(r) * std::exp(-(r.transpose() * zeta)(0)); };
  return enveloped_integral(g, envelope_of(envelope_hint), ell, nodes);
}

cdouble fourier_numeric(const Function& f, const CVector& zeta, const AnisotropyMatrix& envelope_hint, int nodes) {
  const std::size_t n = envelope_hint.dim();
  if (static_cast<std::size_t>(zeta.size()) != n) throw UsageError("argument dimension does not match the envelope");
  const RVector ell = zeta.imag();
  auto g = [&](const CVector& r) { return f(r) * std::exp(-kI * (r.transpose() * zeta)(0)); };
  return std::pow(2.0 * std::numbers::pi, -0.5 * static_cast<double>(n)) *
         enveloped_integral(g, envelope_of(envelope_hint), ell, nodes);
}

// ---------------------------------------------------------------------------

TransformedMode lct_closed(const LctParams& a, const AnisotropyMatrix& theta, const MultiIndex& nu,
                           const LctOptions& options) {
  const std::size_t n = theta.dim();
  if (nu.size() != n) throw UsageError("degree length does not match the anisotropy dimension");
  if (a.b == 0.0) throw DomainError("unsupported LCT parameters: closed form requires b != 0");
  if (options.require_re_pd && !theta.re_pd())
    throw DomainError("Theta does not have a positive definite real part");

  const CMatrix& th = theta.matrix();
  const CMatrix& q = theta.inverse();
  const CMatrix eye = identity(n);
  const AnisotropyMatrix sigma = named_matrix(q - kI * (a.a / a.b) * eye, "Sigma", options.require_re_pd);
  const CMatrix& s = sigma.matrix();
  const CMatrix xi_m = a.b * a.b * (2.0 * inverse_symmetric(symmetrized(th * s * th)) - q);
  const AnisotropyMatrix xi = named_matrix(xi_m, "Xi", options.require_re_pd);
  const CMatrix c =
      symmetrized(th * (s / a.b - kI * a.d * s * s) * th / a.b - xi.inverse());
  const CMatrix arg = sigma.inverse() * q;

  const cdouble one_over_ib = 1.0 / (kI * a.b);
  const cdouble prefactor = ipow(one_over_ib, nu.degree()) * std::pow(one_over_ib, 0.5 * static_cast<double>(n)) *
                            xi.det_quarter() / (sigma.det_half() * theta.det_quarter());

  TransformedMode out(prefactor, c, arg, AhgMode(xi, nu, true));
  out.sigma = s;
  out.xi = xi.matrix();

  const bool want = options.calibration == Calibration::On ||
                    (options.calibration == Calibration::Auto && (!theta.is_real() || !a.is_real()));
  if (!want) return out;

  // reference point: largest |closed| over a coarse probe grid
  const int per_axis = n <= 2 ? 5 : 3;
  std::size_t count = 1;
  for (std::size_t k = 0; k < n; ++k) count *= static_cast<std::size_t>(per_axis);
  CVector best = CVector::Zero(static_cast<Eigen::Index>(n));
  double best_abs = -1.0;
  for (std::size_t i = 0; i < count; ++i) {
    CVector z(static_cast<Eigen::Index>(n));
    std::size_t rest = i;
    for (std::size_t k = 0; k < n; ++k) {
      z(static_cast<Eigen::Index>(k)) = -1.0 + 2.0 * static_cast<double>(rest % per_axis) / (per_axis - 1);
      rest /= static_cast<std::size_t>(per_axis);
    }
    const double v = std::abs(out(z));
    if (v > best_abs) {
      best_abs = v;
      best = z;
    }
  }
  const AhgMode input(theta, nu);
  cdouble numeric;
  try {
    numeric = lct_numeric(a, [&](const CVector& r) { return input(r); }, best, theta, options.calibration_nodes);
  } catch (const Error&) {
    if (options.calibration == Calibration::On) throw;
    return out;
  }
  const cdouble ratio = numeric / out(best);
  const double step = std::numbers::pi / 4.0;
  const cdouble snap = std::polar(1.0, step * std::round(std::arg(ratio) / step));
  TransformedMode cal = out.scaled(snap);
  cal.calibration = snap;
  cal.calibrated = true;
  return cal;
}

TransformedMode fourier_closed(const AnisotropyMatrix& theta, const MultiIndex& nu) {
  if (nu.size() != theta.dim()) throw UsageError("degree length does not match the anisotropy dimension");
  return TransformedMode(ipow(-kI, nu.degree()), CMatrix::Zero(0, 0), identity(theta.dim()),
                         AhgMode(theta.inverted(), nu, true));
}

TransformedMode frft_closed(double gamma, const AnisotropyMatrix& theta, const MultiIndex& nu,
                            const LctOptions& options) {
  if (std::abs(std::sin(gamma)) < 1e-12)
    throw DomainError("unsupported fractional order: gamma is a multiple of pi (b = 0)");
  const double half_n = 0.5 * static_cast<double>(theta.dim());
  TransformedMode t = lct_closed(LctParams::frft(gamma), theta, nu, options);
  return t.scaled(std::polar(1.0, half_n * gamma));
}

TransformedMode laplace_closed(const AnisotropyMatrix& theta, const MultiIndex& nu) {
  if (nu.size() != theta.dim()) throw UsageError("degree length does not match the anisotropy dimension");
  const std::size_t n = theta.dim();
  const cdouble pre = std::pow(2.0 * std::numbers::pi, 0.5 * static_cast<double>(n)) * ipow(kI, nu.degree());
  return TransformedMode(pre, CMatrix::Zero(0, 0), kI * identity(n), AhgMode(theta.inverted(), nu, true));
}

cdouble laplace_eigenfunction(const MultiIndex& nu, const CVector& zeta) {
  const cdouble c = std::polar(1.0, std::numbers::pi / 4.0);
  return eval(AnisotropyMatrix::identity(nu.size()), nu, c * zeta);
}

cdouble laplace_eigenvalue(const MultiIndex& nu) {
  const double n = static_cast<double>(nu.size());
  // (√(−i))ⁿ: the branch of √((−i)ⁿ) that factors over coordinates
  return std::pow(2.0 * std::numbers::pi, 0.5 * n) * ipow(kI, nu.degree()) *
         ipow(std::sqrt(-kI), static_cast<int>(nu.size()));
}

cdouble laplace_eigenfunction_numeric(const MultiIndex& nu, const CVector& zeta, int nodes) {
  const std::size_t n = nu.size();
  if (static_cast<std::size_t>(zeta.size()) != n) throw UsageError("argument dimension does not match the degree");
  const cdouble cbar = std::polar(1.0, -std::numbers::pi / 4.0);
  const CVector w = cbar * zeta;
  auto g = [&](const CVector& t) {
    cdouble v = std::exp(-(t.transpose() * w)(0));
    for (std::size_t k = 0; k < n; ++k) v *= hg1(nu[k], t(static_cast<Eigen::Index>(k)));
    return v;
  };
  const auto ni = static_cast<Eigen::Index>(n);
  const cdouble integral = enveloped_integral(g, RMatrix::Identity(ni, ni), -w.real(), nodes);
  return std::pow(cbar, static_cast<double>(n)) * integral;
}

// ---------------------------------------------------------------------------

cdouble LctEigenmode::eigenvalue(const MultiIndex& nu) const {
  const cdouble one_over_ib = 1.0 / (kI * params.b);
  const auto n = static_cast<int>(nu.size());
  return ipow(one_over_ib, nu.degree()) * std::pow(one_over_ib, 0.5 * n) * ipow(alpha, nu.degree()) *
         std::sqrt(ipow(alpha, n));
}

LctEigenmode lct_eigenmode(const LctParams& a, bool allow_boundary) {
  if (std::abs(a.a - a.d) > 1e-12) throw DomainError("eigenmode condition failed: requires a = d");
  if (std::abs(a.a * a.a - 1.0) <= 1e-12) throw DomainError("eigenmode condition failed: requires a^2 != 1");
  if (a.b == 0.0) throw DomainError("eigenmode condition failed: requires b != 0");
  const cdouble root = std::sqrt((a.a * a.a - 1.0) * a.b * a.b);
  if (std::abs(root + a.a * a.b) <= 1e-12 * std::max(1.0, std::abs(root)))
    throw DomainError("eigenmode condition failed: requires sqrt((a^2-1) b^2) != -ab");
  LctEigenmode out{kI * a.b * a.b / (root + a.a * a.b), kI * a.b * a.b / root, false, a};
  out.re_pd = out.beta.real() > kDefaultPdTol * (1.0 + std::abs(out.beta.real()));
  if (!out.re_pd && !allow_boundary)
    throw DomainError("eigenmode condition failed: beta I does not have a positive definite real part");
  return out;
}

}  // namespace ahg
