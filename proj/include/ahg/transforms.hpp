#pragma once

// Linear canonical transform of AHG modes in closed form, its Fourier,
// fractional Fourier and Laplace specializations, and a quadrature LCT.
//
// LCT_A{f}(ζ) = (1/(2πib))^{n/2} e^{i(d/2b)ζ²} ∫ f(r) e^{−(i/2b) r·(2ζ − a r)} dr.

#include <functional>
#include <optional>
#include <string>

#include "ahg/ahg.hpp"
#include "ahg/oracle.hpp"

namespace ahg {

/// [a b; c d] with ad − bc = 1.
struct LctParams {
  cdouble a, b, c, d;

  LctParams(cdouble a, cdouble b, cdouble c, cdouble d);

  static LctParams ft();
  static LctParams frft(double gamma);
  /// [0 i; i 0]
  static LctParams laplace();

  bool is_real() const noexcept;
  std::string to_string() const;
};

/// value(ζ) = prefactor · e^{−½ξᵀCξ} · H̃G^Ξ_ν(ξ), ξ = arg_map · ζ.
class TransformedMode {
 public:
  TransformedMode(cdouble prefactor, CMatrix quad_matrix, CMatrix arg_map, AhgMode mode);

  cdouble operator()(const CVector& zeta) const;

  cdouble prefactor() const noexcept { return prefactor_; }
  const CMatrix& quad_matrix() const noexcept { return quad_; }
  const CMatrix& arg_map() const noexcept { return arg_map_; }
  const AhgMode& mode() const noexcept { return mode_; }

  /// Σ and Ξ when produced by lct_closed.
  std::optional<CMatrix> sigma, xi;
  /// Unit-modulus factor applied by phase calibration (1 when none).
  cdouble calibration{1.0, 0.0};
  bool calibrated = false;

  TransformedMode scaled(cdouble factor) const;

 private:
  cdouble prefactor_;
  CMatrix quad_;
  CMatrix arg_map_;
  AhgMode mode_;
  bool quad_zero_ = true;
};

enum class Calibration { Auto, On, Off };

struct LctOptions {
  /// Auto calibrates when Θ or A is complex.
  Calibration calibration = Calibration::Auto;
  /// When false, Θ, Σ and Ξ need only admit principal roots; used for the
  /// formal eigenmode identities on the Re-PD boundary.
  bool require_re_pd = true;
  int calibration_nodes = 80;
};

/// Closed-form LCT of HG^Θ_ν. Throws DomainError for b = 0, and DomainError naming
/// Σ or Ξ when its real part is not positive definite.
TransformedMode lct_closed(const LctParams& a, const AnisotropyMatrix& theta, const MultiIndex& nu,
                           const LctOptions& options = {});

/// Quadrature LCT of f whose envelope is e^{−½rᵀΘ⁻¹r} for the given hint.
/// Throws ConvergenceError when Re Θ⁻¹ + Im(a/b)I is not positive definite.
cdouble lct_numeric(const LctParams& a, const Function& f, const CVector& zeta, const AnisotropyMatrix& envelope_hint,
                    int nodes = 80);

/// Two-sided Laplace transform ∫ f(r) e^{−ζ·r} dr by quadrature (real ζ).
cdouble laplace_numeric(const Function& f, const CVector& zeta, const AnisotropyMatrix& envelope_hint,
                        int nodes = kDefaultQuadratureNodes);

/// Unitary angular-frequency Fourier transform (2π)^{−n/2} ∫ f e^{−iζ·r} dr by quadrature.
cdouble fourier_numeric(const Function& f, const CVector& zeta, const AnisotropyMatrix& envelope_hint,
                        int nodes = kDefaultQuadratureNodes);

/// (−i)^{|ν|} H̃G^{Θ⁻¹}_ν(ζ) = (−i)^{|ν|} |Θ|^{1/2} HG^Θ_ν(Θζ).
TransformedMode fourier_closed(const AnisotropyMatrix& theta, const MultiIndex& nu);

/// e^{i(n/2)γ} LCT_{FrFT(γ)}. Throws DomainError when sin γ = 0.
TransformedMode frft_closed(double gamma, const AnisotropyMatrix& theta, const MultiIndex& nu,
                            const LctOptions& options = {});

/// (2π)^{n/2} i^{|ν|} |Θ|^{1/2} HG^Θ_ν(iΘζ).
TransformedMode laplace_closed(const AnisotropyMatrix& theta, const MultiIndex& nu);

/// Laplace eigenfunction HG^I_ν(cζ) with c = (1+i)/√2, and its eigenvalue
/// (2π)^{n/2} i^{|ν|} (√(−i))ⁿ.
cdouble laplace_eigenfunction(const MultiIndex& nu, const CVector& zeta);
cdouble laplace_eigenvalue(const MultiIndex& nu);
/// ∫ HG^I_ν(c r) e^{−ζ·r} dr by quadrature along the rotated contour r = c̄ t.
cdouble laplace_eigenfunction_numeric(const MultiIndex& nu, const CVector& zeta, int nodes = kDefaultQuadratureNodes);

struct LctEigenmode {
  cdouble alpha;
  cdouble beta;
  /// Whether βI has a positive definite real part.
  bool re_pd = false;
  /// (1/(ib))^{|ν|+n/2} α^{|ν|} √(αⁿ)
  cdouble eigenvalue(const MultiIndex& nu) const;
  LctParams params;
};

/// Eigen-anisotropy βI of an LCT with a = d. Throws DomainError naming the
/// failed condition; with allow_boundary the Re-PD requirement on βI is lifted.
LctEigenmode lct_eigenmode(const LctParams& a, bool allow_boundary = false);

}  // namespace ahg
