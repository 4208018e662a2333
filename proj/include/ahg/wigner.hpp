#pragma once

// Wigner–Ville distribution W_f(r, ζ) = F{f(r − ½ξ) f*(r + ½ξ)}(ζ), with the
// unitary angular-frequency transform in ξ.

#include <map>
#include <vector>

#include "ahg/ahg.hpp"
#include "ahg/oracle.hpp"

namespace ahg {

struct PhasePoint {
  RVector r;
  RVector zeta;

  PhasePoint(RVector r_, RVector zeta_);
  std::size_t dim() const noexcept { return static_cast<std::size_t>(r.size()); }
};

/// Pair kernel F{HG_ν(r − ½ξ) HG_μ(r + ½ξ)}(ζ) for real positive definite Θ:
///
///   (4ⁿπⁿ|Θ|)^{1/4} e^{−½ζᵀΘζ} Σ_{τ⪯ν, σ⪯μ} (−1)^{|μ−σ|} i^{|α|}
///     √(C(ν,τ) C(μ,σ) C(α, ν−τ)) HG_τ(r) HG_σ(r) H̃G^{Θ⁻¹}_α(ζ),   α = ν+μ−τ−σ.
///
/// Throws DomainError for complex Θ.
cdouble wvd_pair(const AnisotropyMatrix& theta, const MultiIndex& nu, const MultiIndex& mu, const PhasePoint& p);

/// W_f for f = Σ a_ν HG^Θ_ν. Modes and pair weights are built once; each
/// point evaluates every HG_τ(r) and H̃G^{Θ⁻¹}_α(ζ) once and sums the upper
/// triangle of (ν, μ) pairs, adding each off-diagonal term with its conjugate.
class WvdExpansion {
 public:
  explicit WvdExpansion(const ModeExpansion& f);
  cdouble operator()(const PhasePoint& p) const;

 private:
  struct PairTerm {
    std::size_t tau, sigma, alpha;  // indices into the mode tables
    double weight;                  // (−1)^{|μ−σ|} √(binomials), times i^{|α|} applied at evaluation
    int alpha_degree;
  };
  struct Pair {
    cdouble coeff;  // a_ν a_μ*
    bool diagonal;
    std::vector<PairTerm> terms;
  };
  std::size_t dim_;
  RMatrix theta_;
  cdouble norm_;
  std::vector<AhgMode> low_modes_;    // HG_τ
  std::vector<AhgMode> dual_modes_;   // H̃G^{Θ⁻¹}_α
  std::vector<Pair> pairs_;
};

cdouble wvd_expansion(const ModeExpansion& f, const PhasePoint& p);

/// F{f(r − ½ξ) g(r + ½ξ)}(ζ) by quadrature in ξ (no conjugation). The hint's
/// Re Θ⁻¹ sets the envelope e^{−¼ξᵀ Re Θ⁻¹ ξ}.
cdouble wvd_cross_numeric(const Function& f, const Function& g, const PhasePoint& p,
                          const AnisotropyMatrix& envelope_hint, int nodes = kDefaultQuadratureNodes);
/// W_f by quadrature.
cdouble wvd_numeric(const Function& f, const PhasePoint& p, const AnisotropyMatrix& envelope_hint,
                    int nodes = kDefaultQuadratureNodes);

/// Quadrature WVD on a grid: for each r in rs, the kernel is sampled once and
/// transformed at every ζ in zetas. Result(i, j) = W(rs[i], zetas[j]).
CMatrix wvd_numeric_grid(const Function& f, const std::vector<RVector>& rs, const std::vector<RVector>& zetas,
                         const AnisotropyMatrix& envelope_hint, int nodes = kDefaultQuadratureNodes);

/// Convention constant of the marginal ∫ W_f(r, ζ) dζ = c(n) |f(r)|², c(n) = (2π)^{n/2}.
double wvd_marginal_constant(std::size_t n);

}  // namespace ahg
