#include "ahg/verify.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>

#include "ahg/ahg.hpp"
#include "ahg/hermite1d.hpp"
#include "ahg/io.hpp"
#include "ahg/oracle.hpp"
#include "ahg/transforms.hpp"
#include "ahg/wigner.hpp"

namespace ahg {

namespace {

constexpr cdouble kI{0.0, 1.0};
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

class Recorder {
 public:
  Recorder(std::string suite, const VerifyOptions& opt, std::vector<CheckResult>& out)
      : suite_(std::move(suite)), opt_(opt), out_(out) {}

  void check(const std::string& name, double error, double tolerance, std::string note = {}) {
    const std::string key = suite_ + "." + name;
    if (auto it = opt_.tolerances.find(key); it != opt_.tolerances.end())
      tolerance = it->second;
    else if (opt_.tolerance)
      tolerance = *opt_.tolerance;
    out_.push_back({suite_, name, error, tolerance, std::isfinite(error) && error < tolerance, std::move(note)});
  }

  // Passes when fn throws E whose message contains `needle`.
  template <class E>
  void expect_throw(const std::string& name, const std::function<void()>& fn, const std::string& needle = {}) {
    std::string note = "no exception";
    double error = 1.0;
    try {
      fn();
    } catch (const E& e) {
      note = e.what();
      if (std::string(e.what()).find(needle) != std::string::npos) error = 0.0;
    } catch (const std::exception& e) {
      note = std::string("wrong exception: ") + e.what();
    }
    check(name, error, 0.5, note);
  }

  void check_true(const std::string& name, bool ok, std::string note = {}) { check(name, ok ? 0.0 : 1.0, 0.5, note); }

 private:
  std::string suite_;
  const VerifyOptions& opt_;
  std::vector<CheckResult>& out_;
};

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : g_(seed) {}
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(g_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(g_); }

  CVector real_point(std::size_t n, double scale = 1.5) {
    CVector r(static_cast<Eigen::Index>(n));
    for (auto& v : r) v = uniform(-scale, scale);
    return r;
  }
  RVector rpoint(std::size_t n, double scale = 1.5) { return real_point(n, scale).real(); }
  CVector complex_point(std::size_t n, double scale = 1.0) {
    CVector r(static_cast<Eigen::Index>(n));
    for (auto& v : r) v = cdouble(uniform(-scale, scale), uniform(-0.5 * scale, 0.5 * scale));
    return r;
  }

  AnisotropyMatrix theta(std::size_t n, bool complex) {
    const auto ni = static_cast<Eigen::Index>(n);
    RMatrix b(ni, ni);
    for (auto& v : b.reshaped()) v = uniform(-0.5, 0.5);
    RMatrix a = b * b.transpose() + uniform(0.5, 1.2) * RMatrix::Identity(ni, ni);
    CMatrix t = a.cast<cdouble>();
    if (complex) {
      RMatrix s(ni, ni);
      for (auto& v : s.reshaped()) v = uniform(-0.3, 0.3);
      t += kI * (0.5 * (s + s.transpose())).cast<cdouble>();
    }
    return AnisotropyMatrix(t);
  }

  MultiIndex degree(std::size_t n, int max_degree, int min_degree = 0) {
    const int d = integer(min_degree, max_degree);
    std::vector<int> v(n, 0);
    for (int k = 0; k < d; ++k) ++v[static_cast<std::size_t>(integer(0, static_cast<int>(n) - 1))];
    return MultiIndex(v);
  }

 private:
  std::mt19937_64 g_;
};

double rel_error(const std::vector<cdouble>& got, const std::vector<cdouble>& want) {
  double diff = 0.0, scale = 0.0;
  for (std::size_t i = 0; i < got.size(); ++i) {
    diff = std::max(diff, std::abs(got[i] - want[i]));
    scale = std::max(scale, std::abs(want[i]));
  }
  return diff / std::max(scale, 1e-300);
}

AnisotropyMatrix reference_theta(std::size_t n) {
  const auto ni = static_cast<Eigen::Index>(n);
  if (n == 2) return AnisotropyMatrix((CMatrix(2, 2) << 1.0, 0.3, 0.3, 0.8).finished());
  CMatrix t(ni, ni);
  for (Eigen::Index j = 0; j < ni; ++j)
    for (Eigen::Index k = 0; k < ni; ++k)
      t(j, k) = std::pow(0.3, std::abs(j - k)) * std::sqrt((1.0 - 0.1 * j) * (1.0 - 0.1 * k));
  return AnisotropyMatrix(t);
}

AnisotropyMatrix scalar_theta(cdouble v, std::size_t n = 1) {
  const auto ni = static_cast<Eigen::Index>(n);
  return AnisotropyMatrix(v * CMatrix::Identity(ni, ni));
}

Function as_function(const AhgMode& m) {
  return [m](const CVector& r) { return m(r); };
}

std::vector<CVector> zeta_grid(std::size_t n, int per_axis, double lo, double hi) {
  std::vector<Axis> axes(n, Axis{lo, hi, per_axis});
  std::vector<CVector> out;
  for (std::size_t i = 0; i < grid_size(axes); ++i) out.push_back(grid_point(axes, i).cast<cdouble>());
  return out;
}

int nodes_or(const VerifyOptions& o, int fallback) { return o.nodes > 0 ? o.nodes : fallback; }

// ---------------------------------------------------------------------------

void suite_orthogonality(Recorder& rec, const VerifyOptions& o) {
  const std::size_t n = o.n;
  if (n < 1 || n > 3) throw UsageError("orthogonality suite supports n between 1 and 3");
  const int m = nodes_or(o, n <= 2 ? 80 : 32);
  const auto degrees = degrees_up_to(n, o.max_order);

  auto run = [&](const AnisotropyMatrix& theta, bool conjugate, const std::string& name) {
    const auto t0 = Clock::now();
    std::vector<Function> fs, gs;
    for (const auto& nu : degrees) {
      fs.push_back(as_function(AhgMode(theta, nu)));
      gs.push_back(as_function(AhgMode(theta, nu, true)));
    }
    const CMatrix g = gram(fs, gs, theta, m, conjugate);
    const auto d = static_cast<Eigen::Index>(degrees.size());
    const double err = max_abs(g - CMatrix::Identity(d, d));
    std::ostringstream note;
    note << degrees.size() * degrees.size() << " pairs, " << m << " nodes/axis, " << seconds_since(t0) << " s";
    rec.check(name, err, 1e-8, note.str());
    return seconds_since(t0);
  };
  const AnisotropyMatrix theta = reference_theta(n);
  const double secs = run(theta, true, "biorthonormal_real");
  rec.check("runtime_seconds", secs, 60.0);
  CMatrix tc = theta.matrix();
  for (Eigen::Index k = 0; k < tc.rows(); ++k) tc(k, k) += kI * (0.2 - 0.1 * static_cast<double>(k));
  run(AnisotropyMatrix(tc), false, "biorthonormal_complex_bilinear");

  // tail diagnostic on an under-resolved rule
  const AhgMode hi(theta, MultiIndex(std::vector<int>(n, o.max_order)));
  const auto coarse = inner_product(as_function(hi), as_function(hi), theta, std::max(2, o.max_order));
  const auto fine = inner_product(as_function(hi), as_function(hi), theta, m);
  rec.check_true("tail_warning_flags_coarse_rule", coarse.tail_ratio > fine.tail_ratio && !fine.warning());
}

void suite_decomposition(Recorder& rec, const VerifyOptions& o) {
  Rng rng(o.seed + 1);
  double worst = 0.0;
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto theta = AnisotropyMatrix::identity(n);
    for (int i = 0; i < 50; ++i) {
      const MultiIndex nu = rng.degree(n, 6);
      const CVector r = rng.complex_point(n, 2.0);
      cdouble prod = 1.0;
      for (std::size_t k = 0; k < n; ++k) prod *= hg1(nu[k], r(static_cast<Eigen::Index>(k)));
      worst = std::max(worst, std::abs(eval(theta, nu, r) - prod));
    }
  }
  rec.check("identity_theta_product", worst, 1e-12, "n = 1..3, |nu| <= 6, 50 points each");

  // univariate scaling HG^θ_ν(r) = θ^{-1/4-ν/2} hg_ν(r/√θ)
  double scal = 0.0;
  for (int i = 0; i < 20; ++i) {
    const cdouble th(rng.uniform(0.4, 2.0), rng.uniform(-0.5, 0.5));
    const int k = rng.integer(0, 8);
    const cdouble r(rng.uniform(-2, 2), 0.0);
    const cdouble want = std::pow(th, -0.25 - 0.5 * k) * hg1(k, r / std::sqrt(th));
    scal = std::max(scal, std::abs(eval(scalar_theta(th), MultiIndex{k}, CVector::Constant(1, r)) - want) /
                              std::max(1.0, std::abs(want)));
  }
  rec.check("univariate_scaling", scal, 1e-12);
}

void suite_generating(Recorder& rec, const VerifyOptions& o) {
  Rng rng(o.seed + 2);
  double worst = 0.0, worst_dual = 0.0;
  for (std::size_t n = 1; n <= 2; ++n) {
    for (int i = 0; i < 4; ++i) {
      const auto theta = rng.theta(n, i % 2 == 1);
      CVector x = rng.complex_point(n, 1.0);
      x *= rng.uniform(0.05, 0.3) / x.norm();
      const CVector r = rng.real_point(n, 1.0);
      const cdouble closed = generating_closed(theta, x, r);
      worst = std::max(worst, std::abs(generating_sum(theta, x, r, 30) - closed) / std::abs(closed));
      const cdouble closed_d = generating_closed(theta, x, r, true);
      worst_dual =
          std::max(worst_dual, std::abs(generating_sum(theta, x, r, 30, true) - closed_d) / std::abs(closed_d));
    }
  }
  rec.check("primal_order30", worst, 1e-9, "n <= 2, |x| <= 0.3");
  rec.check("dual_order30", worst_dual, 1e-9);
}

void suite_zero(Recorder& rec, const VerifyOptions& o) {
  Rng rng(o.seed + 3);
  double worst = 0.0;
  for (std::size_t n = 1; n <= 3; ++n) {
    for (int i = 0; i < 12; ++i) {
      const auto theta = rng.theta(n, i % 2 == 1);
      const MultiIndex nu = rng.degree(n, 8);
      worst = std::max(worst, std::abs(eval_at_zero(theta, nu) - eval(theta, nu, CVector::Zero(static_cast<Eigen::Index>(n)))));
    }
  }
  rec.check("closed_vs_eval", worst, 1e-11, "|nu| <= 8, n <= 3");
  double hz = 0.0;
  for (int k = 0; k <= 40; ++k) hz = std::max(hz, std::abs(hg1_at_zero(k) - hg1(k, 0.0)));
  rec.check("univariate_at_zero", hz, 1e-14);
}

void suite_derivatives(Recorder& rec, const VerifyOptions& o) {
  Rng rng(o.seed + 4);
  double g_err = 0.0, h_err = 0.0, l_err = 0.0, tr_err = 0.0;
  for (std::size_t n = 1; n <= 3; ++n) {
    for (int trial = 0; trial < 3; ++trial) {
      const auto theta = rng.theta(n, trial != 0);
      const MultiIndex nu = rng.degree(n, 4, 1);
      const AhgMode mode(theta, nu);
      const Function f = as_function(mode);
      std::vector<cdouble> g_got, g_want, h_got, h_want, l_got, l_want;
      for (int i = 0; i < 10; ++i) {
        const CVector r = rng.real_point(n, 1.2);
        const CVector g = gradient(theta, nu, r), gf = fd_gradient(f, r);
        const CMatrix h = hessian(theta, nu, r), hf = fd_hessian(f, r);
        const cdouble l = laplacian(theta, nu, r);
        g_got.insert(g_got.end(), g.begin(), g.end());
        g_want.insert(g_want.end(), gf.begin(), gf.end());
        h_got.insert(h_got.end(), h.reshaped().begin(), h.reshaped().end());
        h_want.insert(h_want.end(), hf.reshaped().begin(), hf.reshaped().end());
        l_got.push_back(l);
        l_want.push_back(fd_laplacian(f, r));
        tr_err = std::max(tr_err, std::abs(h.trace() - l) / std::max(1.0, std::abs(l)));
        for (std::size_t j = 0; j < n; ++j)
          tr_err = std::max(tr_err, std::abs(partial(theta, nu, r, j) - g(static_cast<Eigen::Index>(j))));
      }
      g_err = std::max(g_err, rel_error(g_got, g_want));
      h_err = std::max(h_err, rel_error(h_got, h_want));
      l_err = std::max(l_err, rel_error(l_got, l_want));
    }
  }
  rec.check("gradient_vs_fd", g_err, 1e-5, "relative to max magnitude");
  rec.check("hessian_vs_fd", h_err, 1e-5);
  rec.check("laplacian_vs_fd", l_err, 1e-5);
  rec.check("trace_hessian_eq_laplacian", tr_err, 1e-12);

  // stencils on elementary functions
  const Function sq = [](const CVector& r) { return r(0) * r(0); };
  const CVector r1 = CVector::Constant(1, 0.7);
  rec.check("fd_gradient_square", std::abs(fd_gradient(sq, r1, 1e-5)(0) - 1.4), 1e-9);
  const Function gauss = [](const CVector& r) { return std::exp(-0.5 * (r.transpose() * r)(0)); };
  const CVector r2 = rng.real_point(2, 1.0);
  const cdouble want = ((r2.transpose() * r2)(0) - 2.0) * gauss(r2);
  rec.check("fd_laplacian_gaussian", std::abs(fd_laplacian(gauss, r2) - want), 1e-6);
}

void suite_anisotropy(Recorder& rec, const VerifyOptions& o) {
  Rng rng(o.seed + 5);
  double worst = 0.0;
  for (int pair = 0; pair < 5; ++pair) {
    const std::size_t n = 1 + static_cast<std::size_t>(pair % 3);
    const auto t1 = rng.theta(n, pair % 2 == 0);
    const auto t2 = rng.theta(n, pair % 2 == 1);
    const MultiIndex nu = rng.degree(n, 5, 2);
    const ModeExpansion ex = anisotropy_transform(t1, t2, nu);
    std::vector<cdouble> got, want;
    for (int i = 0; i < 20; ++i) {
      const CVector r = rng.real_point(n);
      got.push_back(ex(r));
      want.push_back(eval(t1, nu, r));
    }
    worst = std::max(worst, rel_error(got, want));
  }
  rec.check("reconstruction", worst, 1e-9, "5 pairs, |nu| <= 5, 20 points");
}

void suite_offset(Recorder& rec, const VerifyOptions& o) {
  Rng rng(o.seed + 6);
  double worst = 0.0;
  for (int trial = 0; trial < 6; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(trial % 3);
    const auto theta = rng.theta(n, trial % 2 == 1);
    const MultiIndex nu = rng.degree(n, 4, 1);
    const CVector s = rng.complex_point(n, 0.8);
    const OffsetExpansion ex(theta, nu, s);
    std::vector<cdouble> got, want;
    for (int i = 0; i < 20; ++i) {
      const CVector r = rng.real_point(n);
      got.push_back(ex(r));
      want.push_back(eval(theta, nu, r + s));
    }
    worst = std::max(worst, rel_error(got, want));
  }
  rec.check("shifted_argument", worst, 1e-9, "|nu| <= 4, 20 points");
}

void suite_product(Recorder& rec, const VerifyOptions& o) {
  Rng rng(o.seed + 7);
  double worst = 0.0;
  for (int trial = 0; trial < 6; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(trial % 3);
    const auto theta = rng.theta(n, trial % 2 == 0);
    const MultiIndex nu = rng.degree(n, 4, 1), mu = rng.degree(n, 4, 1);
    const ProductExpansion ex(theta, nu, mu);
    std::vector<cdouble> got, want;
    for (int i = 0; i < 20; ++i) {
      const CVector r = rng.real_point(n);
      got.push_back(ex(r));
      want.push_back(eval(theta, nu, r) * eval(theta, mu, r));
    }
    worst = std::max(worst, rel_error(got, want));
  }
  rec.check("product_of_modes", worst, 1e-9, "|nu|, |mu| <= 4, 20 points");
}

// ---------------------------------------------------------------------------

void suite_lct(Recorder& rec, const VerifyOptions& o) {
  const int m = nodes_or(o, 80);
  const AnisotropyMatrix t1 = scalar_theta(0.6);
  const AnisotropyMatrix t2((CMatrix(2, 2) << 0.6, 0.15, 0.15, 0.5).finished());
  struct Case {
    const AnisotropyMatrix* theta;
    MultiIndex nu;
  };
  const std::vector<Case> cases = {{&t1, {0}}, {&t1, {2}}, {&t1, {4}},       {&t2, {1, 1}}, {&t2, {2, 1}},
                                   {&t2, {0, 3}}, {&t2, {2, 2}}, {&t2, {4, 0}}, {&t2, {1, 3}}, {&t1, {3}}};
  const std::vector<std::pair<std::string, LctParams>> params = {{"frft0.7", LctParams::frft(0.7)},
                                                                  {"shear", LctParams(1.0, 1.0, 0.0, 1.0)}};
  LctOptions cal;
  cal.calibration = Calibration::On;
  cal.calibration_nodes = m;
  for (const auto& [label, a] : params) {
    double worst = 0.0;
    bool unit = true;
    for (const auto& c : cases) {
      const TransformedMode t = lct_closed(a, *c.theta, c.nu, cal);
      unit = unit && t.calibration == cdouble(1.0);
      const Function f = as_function(AhgMode(*c.theta, c.nu));
      for (const CVector& z : zeta_grid(c.nu.size(), c.nu.size() == 1 ? 15 : 4, -1.5, 1.5)) {
        if (c.nu.size() == 2 && z.size() == 2 && std::abs(z(0)) < 1e-9) continue;
        worst = std::max(worst, std::abs(t(z) - lct_numeric(a, f, z, *c.theta, m)));
      }
    }
    rec.check("closed_vs_numeric_" + label, worst, 1e-6, "10 (Theta, nu), 15-point grids, calibrated");
    rec.check_true("calibration_is_unity_" + label, unit);
  }

  // complex Θ: calibration runs by default and must not change the phase
  {
    const AnisotropyMatrix tc((CMatrix(2, 2) << cdouble(0.6, 0.1), 0.15, 0.15, cdouble(0.5, -0.05)).finished());
    const MultiIndex nu{2, 1};
    const TransformedMode t = lct_closed(LctParams::frft(0.9), tc, nu);
    const Function f = as_function(AhgMode(tc, nu));
    double worst = 0.0;
    for (const CVector& z : zeta_grid(2, 4, -1.2, 1.2))
      worst = std::max(worst, std::abs(t(z) - lct_numeric(LctParams::frft(0.9), f, z, tc, m)));
    rec.check("closed_vs_numeric_complex_theta", worst, 1e-6);
    rec.check_true("complex_theta_calibrated_to_unity", t.calibrated && t.calibration == cdouble(1.0));
  }

  // preconditions
  const AnisotropyMatrix wide((CMatrix(2, 2) << 1.0, 0.3, 0.3, 0.8).finished());
  rec.expect_throw<DomainError>(
      "xi_not_re_pd_rejected", [&] { lct_closed(LctParams::frft(0.7), wide, MultiIndex{1, 1}); }, "Xi");
  const LctParams damped(cdouble(0.0, -5.0), 1.0, -1.0, 0.0);
  rec.expect_throw<DomainError>(
      "sigma_not_re_pd_rejected", [&] { lct_closed(damped, wide, MultiIndex{1, 0}); }, "Sigma");
  rec.expect_throw<ConvergenceError>("numeric_rejects_growing_envelope", [&] {
    lct_numeric(damped, as_function(AhgMode(wide, MultiIndex{1, 0})), CVector::Zero(2), wide, 16);
  });
  rec.expect_throw<DomainError>(
      "b_zero_rejected", [&] { lct_closed(LctParams(1.0, 0.0, 0.5, 1.0), wide, MultiIndex{0, 0}); }, "b != 0");
  rec.expect_throw<DomainError>("non_unit_determinant_rejected", [] { LctParams(1.0, 1.0, 1.0, 1.0); });

  // continuation outside the Re Ξ ≻ 0 domain still agrees with quadrature
  {
    LctOptions cont;
    cont.require_re_pd = false;
    const MultiIndex nu{1, 1};
    const TransformedMode t = lct_closed(LctParams::frft(0.7), wide, nu, cont);
    const Function f = as_function(AhgMode(wide, nu));
    double worst = 0.0;
    for (const CVector& z : zeta_grid(2, 4, -1.2, 1.2))
      worst = std::max(worst, std::abs(t(z) - lct_numeric(LctParams::frft(0.7), f, z, wide, m)));
    rec.check("continued_domain_vs_numeric", worst, 1e-6);
  }

  // oracle sanity
  {
    const Function f = as_function(AhgMode(t2, MultiIndex{1, 2}));
    const Function g = as_function(AhgMode(t2, MultiIndex{3, 0}));
    const Function fg = [&](const CVector& r) { return f(r) + g(r); };
    CVector z(2);
    z << 0.4, -0.3;
    const LctParams a = LctParams::frft(0.7);
    const cdouble lhs = lct_numeric(a, fg, z, t2, m);
    const cdouble rhs = lct_numeric(a, f, z, t2, m) + lct_numeric(a, g, z, t2, m);
    rec.check("numeric_linearity", std::abs(lhs - rhs), 1e-12);

    const AnisotropyMatrix id = AnisotropyMatrix::identity(1);
    const Function gauss = [](const CVector& r) { return std::pow(std::numbers::pi, -0.25) * std::exp(-0.5 * r(0) * r(0)); };
    double worst = 0.0;
    for (double zz : {-1.0, 0.0, 0.5, 2.0}) {
      const CVector zv = CVector::Constant(1, zz);
      // i^{1/2} LCT_FT{π^{-1/4} e^{-r²/2}} = π^{-1/4} e^{-ζ²/2}
      const cdouble v = std::sqrt(kI) * lct_numeric(LctParams::ft(), gauss, zv, id, m);
      worst = std::max(worst, std::abs(v - std::pow(std::numbers::pi, -0.25) * std::exp(-0.5 * zz * zz)));
    }
    rec.check("numeric_ft_of_gaussian", worst, 1e-8);
  }
}

void suite_fourier(Recorder& rec, const VerifyOptions& o) {
  const int m = nodes_or(o, 64);
  const AnisotropyMatrix theta((CMatrix(2, 2) << 1.0, 0.3, 0.3, 0.8).finished());
  {
    double worst = 0.0;
    for (const MultiIndex& nu : {MultiIndex{2, 1}, MultiIndex{0, 0}, MultiIndex{1, 2}, MultiIndex{3, 0}}) {
      const TransformedMode t = fourier_closed(theta, nu);
      const Function f = as_function(AhgMode(theta, nu));
      for (const CVector& z : zeta_grid(2, 4, -1.5, 1.5))
        worst = std::max(worst, std::abs(t(z) - fourier_numeric(f, z, theta, m)));
    }
    rec.check("closed_vs_quadrature", worst, 1e-7, "Theta=[[1,0.3],[0.3,0.8]]");
  }
  {
    // via the general LCT: F = i^{n/2} LCT_FT
    const MultiIndex nu{2, 1};
    const TransformedMode lct = lct_closed(LctParams::ft(), theta, nu);
    const TransformedMode ft = fourier_closed(theta, nu);
    double worst = 0.0;
    for (const CVector& z : zeta_grid(2, 4, -1.5, 1.5)) worst = std::max(worst, std::abs(kI * lct(z) - ft(z)));
    rec.check("matches_general_lct", worst, 1e-12);
  }
  Rng rng(o.seed + 8);
  double eig = 0.0, parity = 0.0, twice = 0.0;
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto id = AnisotropyMatrix::identity(n);
    for (int i = 0; i < 6; ++i) {
      const MultiIndex nu = rng.degree(n, 5);
      const TransformedMode t = fourier_closed(id, nu);
      const cdouble lambda = std::pow(-kI, nu.degree());
      const CVector z = rng.real_point(n);
      eig = std::max(eig, std::abs(t(z) - lambda * eval(id, nu, z)));
      // F²: the transform of (−i)^{|ν|} HG_ν is (−i)^{2|ν|} HG_ν
      twice = std::max(twice, std::abs(lambda * t(z) - std::pow(-1.0, nu.degree()) * eval(id, nu, z)));
      const auto th = rng.theta(n, false);
      const cdouble v = fourier_closed(th, nu)(z);
      parity = std::max(parity, nu.degree() % 2 ? std::abs(v.real()) : std::abs(v.imag()));
    }
  }
  rec.check("identity_eigenrelation", eig, 1e-12);
  rec.check("involution_even_odd", twice, 1e-12);
  rec.check("real_theta_parity", parity, 1e-12, "even |nu| real, odd |nu| imaginary");

  {
    // Parseval for superpositions
    const Function f = [&](const CVector& r) { return eval(theta, MultiIndex{1, 0}, r) + 0.5 * eval(theta, MultiIndex{0, 2}, r); };
    const Function g = [&](const CVector& r) { return eval(theta, MultiIndex{1, 0}, r) - kI * eval(theta, MultiIndex{2, 1}, r); };
    const TransformedMode f1 = fourier_closed(theta, {1, 0}), f2 = fourier_closed(theta, {0, 2});
    const TransformedMode g1 = fourier_closed(theta, {1, 0}), g2 = fourier_closed(theta, {2, 1});
    const Function ff = [&](const CVector& z) { return f1(z) + 0.5 * f2(z); };
    const Function fg = [&](const CVector& z) { return g1(z) - kI * g2(z); };
    const cdouble lhs = inner_product(f, g, theta, m).value;
    const cdouble rhs = inner_product(ff, fg, theta.inverted(), m).value;
    rec.check("parseval", std::abs(lhs - rhs), 1e-7);
  }
}

void suite_frft(Recorder& rec, const VerifyOptions& o) {
  Rng rng(o.seed + 9);
  const AnisotropyMatrix theta((CMatrix(2, 2) << 1.0, 0.3, 0.3, 0.8).finished());
  {
    double worst = 0.0;
    for (const MultiIndex& nu : {MultiIndex{2, 1}, MultiIndex{0, 0}, MultiIndex{1, 3}}) {
      const TransformedMode a = frft_closed(std::numbers::pi / 2, theta, nu), b = fourier_closed(theta, nu);
      for (const CVector& z : zeta_grid(2, 4, -1.5, 1.5)) worst = std::max(worst, std::abs(a(z) - b(z)));
    }
    rec.check("quarter_turn_equals_fourier", worst, 1e-12);
  }
  {
    // eigenvalues measured from the closed form on Θ = I inside the Re Ξ ≻ 0 range
    const auto id = AnisotropyMatrix::identity(2);
    const MultiIndex nu{2, 1};
    CVector z(2);
    z << 0.35, -0.6;
    auto measured = [&](double g) { return frft_closed(g, id, nu)(z) / eval(id, nu, z); };
    const double g1 = 0.9, g2 = 1.1;
    const cdouble l1 = measured(g1), l2 = measured(g2), l12 = measured(g1 + g2);
    rec.check("eigenvalue_additivity", std::abs(l1 * l2 - l12), 1e-12);
    double ev = 0.0;
    for (double g : {g1, g2, g1 + g2}) ev = std::max(ev, std::abs(measured(g) - std::polar(1.0, -g * nu.degree())));
    rec.check("identity_eigenvalue", ev, 1e-12, "exp(-i gamma |nu|)");
  }
  {
    // γ → 0 needs the continued domain: Re Ξ = −sin²γ cos 2γ < 0 for γ < π/4
    LctOptions cont;
    cont.require_re_pd = false;
    const auto id = AnisotropyMatrix::identity(1);
    const MultiIndex nu{2};
    std::vector<double> dev;
    for (double g : {0.2, 0.1, 0.05}) {
      const TransformedMode t = frft_closed(g, id, nu, cont);
      double d = 0.0;
      for (double zz = -2.0; zz <= 2.0; zz += 0.25) {
        const CVector z = CVector::Constant(1, zz);
        d = std::max(d, std::abs(t(z) - eval(id, nu, z)));
      }
      dev.push_back(d);
    }
    std::ostringstream note;
    note << "deviations " << dev[0] << ", " << dev[1] << ", " << dev[2];
    rec.check_true("small_angle_limit_decreasing", dev[0] > dev[1] && dev[1] > dev[2], note.str());
    rec.expect_throw<DomainError>(
        "small_angle_identity_outside_domain", [&] { frft_closed(0.05, id, nu); }, "Xi");
  }
  rec.expect_throw<DomainError>("multiple_of_pi_rejected",
                                [&] { frft_closed(std::numbers::pi, theta, MultiIndex{1, 0}); });
  {
    // FrFT of a general real mode against quadrature
    const AnisotropyMatrix t((CMatrix(2, 2) << 0.7, 0.1, 0.1, 0.55).finished());
    const MultiIndex nu{1, 2};
    const double g = 1.2;
    const TransformedMode c = frft_closed(g, t, nu);
    const Function f = as_function(AhgMode(t, nu));
    const cdouble norm = std::polar(1.0, g);  // e^{i(n/2)γ}, n = 2
    double worst = 0.0;
    for (const CVector& z : zeta_grid(2, 4, -1.5, 1.5))
      worst = std::max(worst, std::abs(c(z) - norm * lct_numeric(LctParams::frft(g), f, z, t, nodes_or(o, 80))));
    rec.check("closed_vs_numeric", worst, 1e-6);
  }
  (void)rng;
}

void suite_laplace(Recorder& rec, const VerifyOptions& o) {
  const int m = nodes_or(o, 64);
  Rng rng(o.seed + 10);
  {
    double worst = 0.0;
    for (const MultiIndex& nu : {MultiIndex{0}, MultiIndex{3}, MultiIndex{1, 1}, MultiIndex{2, 1}, MultiIndex{0, 4}}) {
      std::vector<cdouble> got, want;
      for (int i = 0; i < 10; ++i) {
        const CVector z = rng.real_point(nu.size(), 1.5);
        got.push_back(laplace_eigenfunction_numeric(nu, z, m));
        want.push_back(laplace_eigenvalue(nu) * laplace_eigenfunction(nu, z));
      }
      worst = std::max(worst, rel_error(got, want));
    }
    rec.check("eigenfunction_relation", worst, 1e-7, "rotated-contour quadrature, 10 points");
  }
  {
    const auto id = AnisotropyMatrix::identity(1);
    const TransformedMode t = laplace_closed(id, MultiIndex{0});
    double worst = 0.0;
    for (double zz : {-1.5, -0.5, 0.0, 0.8, 1.7}) {
      const cdouble want = std::pow(std::numbers::pi, -0.25) * std::sqrt(2.0 * std::numbers::pi) * std::exp(0.5 * zz * zz);
      worst = std::max(worst, std::abs(t(CVector::Constant(1, zz)) - want) / std::abs(want));
    }
    rec.check("gaussian_analytic", worst, 1e-10);
  }
  {
    const AnisotropyMatrix theta((CMatrix(2, 2) << 1.0, 0.3, 0.3, 0.8).finished());
    double worst = 0.0, via_lct = 0.0;
    for (const MultiIndex& nu : {MultiIndex{2, 1}, MultiIndex{0, 2}}) {
      const TransformedMode t = laplace_closed(theta, nu);
      const Function f = as_function(AhgMode(theta, nu));
      for (const CVector& z : zeta_grid(2, 4, -1.0, 1.0)) {
        worst = std::max(worst, std::abs(t(z) - laplace_numeric(f, z, theta, m)));
        // (−2π)^{n/2} LCT_{A_L}, n = 2
        via_lct = std::max(via_lct,
                           std::abs(t(z) - (-2.0 * std::numbers::pi) * lct_numeric(LctParams::laplace(), f, z, theta, m)));
      }
    }
    rec.check("closed_vs_two_sided_integral", worst, 1e-6);
    rec.check("closed_vs_lct_with_laplace_params", via_lct, 1e-6, "n = 2");
  }
}

void suite_eigen(Recorder& rec, const VerifyOptions& o) {
  Rng rng(o.seed + 11);
  {
    const LctParams a(2.0, 1.0, 3.0, 2.0);
    const LctEigenmode e = lct_eigenmode(a, true);
    std::ostringstream note;
    note << "beta=" << e.beta << " alpha=" << e.alpha << " (Re beta = 0: formal continuation)";
    LctOptions cont;
    cont.require_re_pd = false;
    cont.calibration = Calibration::Off;
    double worst = 0.0;
    for (const MultiIndex& nu : {MultiIndex{0}, MultiIndex{1}, MultiIndex{3}, MultiIndex{1, 1}, MultiIndex{2, 1},
                                 MultiIndex{0, 3}}) {
      const std::size_t n = nu.size();
      const auto ni = static_cast<Eigen::Index>(n);
      const AnisotropyMatrix beta_i = AnisotropyMatrix::continued(e.beta * CMatrix::Identity(ni, ni));
      const TransformedMode t = lct_closed(a, beta_i, nu, cont);
      std::vector<cdouble> got, want;
      for (int i = 0; i < 10; ++i) {
        const CVector z = rng.real_point(n, 1.0);
        got.push_back(t(z));
        want.push_back(e.eigenvalue(nu) * eval(beta_i, nu, z));
      }
      worst = std::max(worst, rel_error(got, want));
    }
    rec.check("a2_b1_eigenrelation", worst, 1e-8, note.str());
    rec.expect_throw<DomainError>(
        "boundary_beta_rejected_by_default", [&] { lct_eigenmode(a); }, "positive definite");
  }
  rec.expect_throw<DomainError>(
      "a_ne_d_rejected", [] { lct_eigenmode(LctParams(2.0, 1.0, 1.0, 1.0)); }, "a = d");
  {
    const double g = 0.7;
    const LctEigenmode e = lct_eigenmode(LctParams::frft(g));
    rec.check("frft_beta_is_one", std::abs(e.beta - 1.0), 1e-12);
    double worst = 0.0;
    for (const MultiIndex& nu : {MultiIndex{0}, MultiIndex{2}, MultiIndex{1, 2}, MultiIndex{3, 3}})
      worst = std::max(worst, std::abs(e.eigenvalue(nu) * std::polar(1.0, 0.5 * nu.size() * g) -
                                       std::polar(1.0, -g * nu.degree())));
    rec.check("frft_branch_consistency", worst, 1e-12, "gamma = 0.7");
  }
  {
    // a real-β case inside the domain: FrFT(1.0) on Θ = I through lct_closed
    const double g = 1.0;
    const LctParams a = LctParams::frft(g);
    const LctEigenmode e = lct_eigenmode(a);
    double worst = 0.0;
    for (const MultiIndex& nu : {MultiIndex{2}, MultiIndex{1, 2}}) {
      const auto id = AnisotropyMatrix::identity(nu.size());
      const TransformedMode t = lct_closed(a, id, nu);
      std::vector<cdouble> got, want;
      for (int i = 0; i < 10; ++i) {
        const CVector z = rng.real_point(nu.size(), 1.0);
        got.push_back(t(z));
        want.push_back(e.eigenvalue(nu) * eval(id, nu, z));
      }
      worst = std::max(worst, rel_error(got, want));
    }
    rec.check("frft_eigenrelation_closed", worst, 1e-8);
  }
}

void suite_wvd(Recorder& rec, const VerifyOptions& o) {
  const int m = nodes_or(o, 64);
  Rng rng(o.seed + 12);
  double worst = 0.0;
  for (std::size_t n = 1; n <= 2; ++n) {
    const AnisotropyMatrix theta = n == 1 ? scalar_theta(1.3) : reference_theta(2);
    const auto degrees = degrees_up_to(n, 3);
    std::vector<AhgMode> modes;
    for (const auto& nu : degrees) modes.emplace_back(theta, nu);

    const QuadratureRule rule(m, whitening_for(0.25 * envelope_of(theta)));
    std::vector<RVector> rs, zs;
    for (int i = 0; i < 5; ++i) {
      rs.push_back(rng.rpoint(n, 1.2));
      zs.push_back(rng.rpoint(n, 1.2));
    }
    // e^{−iξ·ζ} table
    std::vector<std::vector<cdouble>> phase(zs.size(), std::vector<cdouble>(rule.size()));
    std::vector<RVector> xis(rule.size());
    for (std::size_t i = 0; i < rule.size(); ++i) xis[i] = rule.node(i);
    for (std::size_t b = 0; b < zs.size(); ++b)
      for (std::size_t i = 0; i < rule.size(); ++i) phase[b][i] = std::exp(-kI * xis[i].dot(zs[b]));
    const double ft_norm = std::pow(2.0 * std::numbers::pi, -0.5 * static_cast<double>(n));

    std::vector<cdouble> kernel(rule.size());
    for (const RVector& r : rs) {
      std::vector<std::vector<cdouble>> minus(modes.size()), plus(modes.size());
      for (std::size_t k = 0; k < modes.size(); ++k) {
        minus[k].resize(rule.size());
        plus[k].resize(rule.size());
        for (std::size_t i = 0; i < rule.size(); ++i) {
          minus[k][i] = modes[k]((r - 0.5 * xis[i]).cast<cdouble>());
          plus[k][i] = modes[k]((r + 0.5 * xis[i]).cast<cdouble>());
        }
      }
      for (std::size_t a = 0; a < modes.size(); ++a) {
        for (std::size_t c = 0; c < modes.size(); ++c) {
          for (std::size_t b = 0; b < zs.size(); ++b) {
            for (std::size_t i = 0; i < rule.size(); ++i) kernel[i] = minus[a][i] * plus[c][i] * phase[b][i];
            const cdouble numeric = ft_norm * rule.sum(kernel);
            const cdouble closed = wvd_pair(theta, degrees[a], degrees[c], PhasePoint(r, zs[b]));
            worst = std::max(worst, std::abs(closed - numeric));
          }
        }
      }
    }
  }
  rec.check("pair_closed_vs_quadrature", worst, 1e-6, "|nu|,|mu| <= 3, n = 1,2, 25 phase points");

  {
    const AnisotropyMatrix theta = reference_theta(2);
    double sym = 0.0;
    const auto degrees = degrees_up_to(2, 3);
    for (int i = 0; i < 20; ++i) {
      const MultiIndex& nu = degrees[static_cast<std::size_t>(rng.integer(0, static_cast<int>(degrees.size()) - 1))];
      const MultiIndex& mu = degrees[static_cast<std::size_t>(rng.integer(0, static_cast<int>(degrees.size()) - 1))];
      const PhasePoint p(rng.rpoint(2), rng.rpoint(2));
      sym = std::max(sym, std::abs(wvd_pair(theta, nu, mu, p) - std::conj(wvd_pair(theta, mu, nu, p))));
    }
    rec.check("pair_conjugate_symmetry", sym, 1e-12);

    std::map<MultiIndex, cdouble> coeffs;
    for (const auto& nu : degrees) coeffs[nu] = cdouble(rng.uniform(-1, 1), rng.uniform(-1, 1));
    const WvdExpansion w{ModeExpansion(theta, coeffs)};
    double im = 0.0;
    for (int i = 0; i < 100; ++i) {
      const cdouble v = w(PhasePoint(rng.rpoint(2, 2.0), rng.rpoint(2, 2.0)));
      im = std::max(im, std::abs(v.imag()) / std::max(1.0, std::abs(v)));
    }
    rec.check("expansion_realness", im, 1e-10, "100 random phase points, random complex coefficients");
    rec.expect_throw<DomainError>("complex_theta_rejected", [&] {
      wvd_pair(AnisotropyMatrix((CMatrix(1, 1) << cdouble(1.0, 0.2)).finished()), {0}, {0},
               PhasePoint(RVector::Zero(1), RVector::Zero(1)));
    });
  }
  {
    // f = HG_1 + HG_2 on Θ = I, n = 1
    const auto id = AnisotropyMatrix::identity(1);
    const ModeExpansion f(id, {{MultiIndex{1}, 1.0}, {MultiIndex{2}, 1.0}});
    const WvdExpansion w(f);
    const Function ff = [&](const CVector& r) { return f(r); };
    double worst = 0.0;
    for (int i = 0; i < 10; ++i) {
      const PhasePoint p(rng.rpoint(1), rng.rpoint(1));
      worst = std::max(worst, std::abs(w(p) - wvd_numeric(ff, p, id, m)));
    }
    rec.check("expansion_vs_quadrature", worst, 1e-6);
    const PhasePoint p0(RVector::Constant(1, 0.3), RVector::Constant(1, -0.2));
    rec.check("single_mode_equals_pair",
              std::abs(wvd_expansion(ModeExpansion(id, {{MultiIndex{0}, 1.0}}), p0) - wvd_pair(id, {0}, {0}, p0)),
              1e-14);
  }
  {
    // marginal ∫ W dζ = c(n)|f(r)|² with c measured on the Gaussian
    auto marginal = [&](const Function& f, const AnisotropyMatrix& hint, const RVector& r) {
      // W(r, ·) decays like e^{−ζᵀ Re(Θ) ζ}; few nodes keep the scaled weights
      // from amplifying round-off of the inner quadrature far out
      const QuadratureRule zr(12, whitening_for(hint.matrix().real()));
      std::vector<RVector> zs(zr.size());
      for (std::size_t i = 0; i < zr.size(); ++i) zs[i] = zr.node(i);
      const CMatrix w = wvd_numeric_grid(f, {r}, zs, hint, 48);
      std::vector<cdouble> vals(w.row(0).begin(), w.row(0).end());
      return zr.sum(vals) / std::norm(f(r.cast<cdouble>()));
    };
    const auto id1 = AnisotropyMatrix::identity(1);
    const RVector r1 = RVector::Constant(1, 0.4);
    const cdouble c1 = marginal(as_function(AhgMode(id1, {0})), id1, r1);
    double spread = 0.0;
    const AnisotropyMatrix t1 = scalar_theta(1.4);
    const std::vector<Function> others = {
        as_function(AhgMode(t1, {1})), as_function(AhgMode(t1, {2})),
        [&](const CVector& x) { return eval(t1, {0}, x) + kI * eval(t1, {3}, x); },
        [&](const CVector& x) { return 0.3 * eval(t1, {1}, x) - eval(t1, {2}, x); },
        [&](const CVector& x) { return eval(t1, {0}, x) * std::exp(kI * 0.5 * x(0)); }};
    for (const Function& f : others) spread = std::max(spread, std::abs(marginal(f, t1, r1) - c1) / std::abs(c1));
    rec.check("marginal_constant_stable", spread, 1e-5, "5 functions, n = 1");
    rec.check("marginal_constant_value", std::abs(c1 - wvd_marginal_constant(1)), 1e-8, "(2 pi)^{n/2}");
    const auto id2 = AnisotropyMatrix::identity(2);
    const cdouble c2 = marginal(as_function(AhgMode(id2, {1, 0})), id2, (RVector(2) << 0.3, -0.2).finished());
    rec.check("marginal_constant_value_2d", std::abs(c2 - wvd_marginal_constant(2)), 1e-7);
  }
}

// ---------------------------------------------------------------------------

void suite_quadrature(Recorder& rec, const VerifyOptions& o) {
  const GaussHermite two = gauss_hermite_rule(2);
  rec.check("two_nodes", std::abs(two.nodes[1] - 1.0 / std::sqrt(2.0)) + std::abs(two.nodes[0] + two.nodes[1]) +
                             std::abs(two.weights[0] - std::sqrt(std::numbers::pi) / 2),
            1e-15);
  double wsum = 0.0, mono = 0.0;
  for (int m : {2, 3, 5, 8, 16, 32, 64, 80, 128, 256}) {
    const GaussHermite g = gauss_hermite_rule(m);
    wsum = std::max(wsum, std::abs(pairwise_sum(std::span<const double>(g.weights)) - std::sqrt(std::numbers::pi)));
    if (m > 64) continue;
    for (int d = 0; d <= std::min(2 * m - 1, 2 * m - 1); d += 2) {
      // ∫ x^d e^{−x²} dx = Γ((d+1)/2)
      std::vector<double> terms;
      for (std::size_t i = 0; i < g.nodes.size(); ++i) terms.push_back(g.weights[i] * std::pow(g.nodes[i], d));
      const double want = std::tgamma(0.5 * (d + 1));
      mono = std::max(mono, std::abs(pairwise_sum(std::span<const double>(terms)) - want) / want);
      if (d > 60) break;  // Γ grows past double range beyond this
    }
  }
  rec.check("weights_sum_sqrt_pi", wsum, 1e-13);
  rec.check("monomial_exactness", mono, 1e-12, "even degrees <= min(2m-1, 60), m <= 64");
  {
    const GaussHermite g3 = gauss_hermite_rule(3);
    double s = 0.0;
    for (std::size_t i = 0; i < 3; ++i) s += g3.weights[i] * g3.nodes[i] * g3.nodes[i];
    rec.check("second_moment_m3", std::abs(s - std::sqrt(std::numbers::pi) / 2), 1e-14);
  }
  rec.expect_throw<UsageError>("node_count_bounds", [] { gauss_hermite_rule(1); });
  {
    // whitening invariance across dominating hints
    const AnisotropyMatrix theta = reference_theta(2);
    const Function f = as_function(AhgMode(theta, {2, 1}));
    const Function g = as_function(AhgMode(theta, {1, 1}));
    const cdouble base = inner_product(f, g, theta, 64).value;
    double spread = 0.0;
    for (double s : {0.8, 0.9, 1.1}) {
      const AnisotropyMatrix hint(theta.matrix() * s);
      spread = std::max(spread, std::abs(inner_product(f, g, hint, 64).value - base));
    }
    rec.check("whitening_invariance", spread, 1e-9);
  }
  {
    // convergence sweep on a hard case: high mode against a mismatched hint
    const AnisotropyMatrix theta = reference_theta(2);
    const AnisotropyMatrix hint(theta.matrix() * 1.6);
    const Function f = as_function(AhgMode(theta, {4, 2}));
    const Function g = as_function(AhgMode(theta, {4, 2}, true));
    std::vector<double> errs;
    for (int m : {16, 32, 64}) errs.push_back(std::abs(inner_product(f, g, hint, m).value - 1.0));
    std::ostringstream note;
    note << errs[0] << " > " << errs[1] << " > " << errs[2];
    rec.check_true("convergence_sweep_monotone", errs[0] > errs[1] && errs[1] > errs[2], note.str());
  }
  (void)o;
}

void suite_expansion(Recorder& rec, const VerifyOptions& o) {
  const AnisotropyMatrix theta = reference_theta(2);
  const int m = nodes_or(o, 48);
  {
    const MultiIndex kappa{2, 1};
    const ExpansionResult r = expand(as_function(AhgMode(theta, kappa)), theta, 4, m);
    double off = 0.0;
    for (const auto& [nu, c] : r.expansion.terms())
      if (nu != kappa) off = std::max(off, std::abs(c));
    rec.check("single_mode_coefficient", std::abs(r.expansion.coefficient(kappa) - 1.0), 1e-8);
    rec.check("single_mode_others", off, 1e-8);
  }
  {
    const Function f = [&](const CVector& x) { return 2.0 * eval(theta, {1, 0}, x) + 3.0 * kI * eval(theta, {0, 2}, x); };
    const ExpansionResult r = expand(f, theta, 3, m);
    rec.check("linear_combination",
              std::abs(r.expansion.coefficient({1, 0}) - 2.0) + std::abs(r.expansion.coefficient({0, 2}) - 3.0 * kI),
              1e-9);
  }
  {
    // synthesize → expand is the identity on truncated expansions
    Rng rng(o.seed + 13);
    std::map<MultiIndex, cdouble> c;
    for (const auto& nu : degrees_up_to(2, 3)) c[nu] = cdouble(rng.uniform(-1, 1), rng.uniform(-1, 1));
    const ModeExpansion s(theta, c);
    const ExpansionResult r = expand([&](const CVector& x) { return s(x); }, theta, 3, m);
    double worst = 0.0;
    for (const auto& [nu, v] : c) worst = std::max(worst, std::abs(r.expansion.coefficient(nu) - v));
    rec.check("synthesize_expand_identity", worst, 1e-9);
  }
  {
    // complex Θ uses the bilinear pairing
    CMatrix tc = theta.matrix();
    tc(0, 0) += cdouble(0.0, 0.2);
    const AnisotropyMatrix thc(tc);
    const ExpansionResult r = expand(as_function(AhgMode(thc, {1, 1})), thc, 3, 80);
    rec.check("complex_theta_bilinear", std::abs(r.expansion.coefficient({1, 1}) - 1.0), 1e-8);
  }
  {
    // offset Gaussian: residual shrinks with the order
    const Function g = [](const CVector& x) {
      return std::exp(-((x(0) - 0.4) * (x(0) - 0.4) + (x(1) + 0.2) * (x(1) + 0.2)));
    };
    const AnisotropyMatrix half = scalar_theta(0.5, 2);
    std::vector<double> res;
    for (int order : {0, 2, 4, 6}) res.push_back(expand(g, half, order, m).residual);
    bool dec = true;
    for (std::size_t i = 1; i < res.size(); ++i) dec = dec && res[i] < res[i - 1];
    std::ostringstream note;
    note << "residuals";
    for (double v : res) note << " " << v;
    rec.check_true("residual_decreases_with_order", dec, note.str());
  }
}

using SuiteFn = void (*)(Recorder&, const VerifyOptions&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> r = {
      {"orthogonality", suite_orthogonality}, {"decomposition", suite_decomposition},
      {"generating", suite_generating},       {"zero", suite_zero},
      {"derivatives", suite_derivatives},     {"anisotropy", suite_anisotropy},
      {"offset", suite_offset},               {"product", suite_product},
      {"lct", suite_lct},                     {"fourier", suite_fourier},
      {"frft", suite_frft},                   {"laplace", suite_laplace},
      {"eigen", suite_eigen},                 {"wvd", suite_wvd},
      {"quadrature", suite_quadrature},       {"expansion", suite_expansion},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [name, fn] : registry()) v.push_back(name);
    v.push_back("all");
    return v;
  }();
  return names;
}

std::vector<CheckResult> run_suite(std::string_view name, const VerifyOptions& options) {
  std::vector<CheckResult> out;
  bool found = false;
  for (const auto& [suite, fn] : registry()) {
    if (name != "all" && name != suite) continue;
    found = true;
    Recorder rec(suite, options, out);
    try {
      fn(rec, options);
    } catch (const UsageError&) {
      throw;
    } catch (const std::exception& e) {
      rec.check("completed", 1.0, 0.5, std::string("unexpected error: ") + e.what());
    }
  }
  if (!found) throw UsageError("unknown suite '" + std::string(name) + "'");
  return out;
}

std::string format_check(const CheckResult& c) {
  std::ostringstream os;
  os << (c.passed ? "PASS " : "FAIL ") << c.suite << "." << c.name << " error=" << format_double(c.error)
     << " tol=" << format_double(c.tolerance);
  if (!c.note.empty()) os << "  " << c.note;
  return os.str();
}

}  // namespace ahg
