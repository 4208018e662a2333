#pragma once

// Independent numerical reference: tensor Gauss–Hermite quadrature over ℝⁿ,
// central finite differences, and coefficient extraction by quadrature.
//
// Nothing here calls the closed forms in ahg/transforms/wigner; only hg1 and
// elementary functions. Callers pass in whatever functions they want checked.

#include <functional>
#include <optional>
#include <vector>

#include "ahg/ahg.hpp"
#include "ahg/cmatrix.hpp"

namespace ahg {

using Function = std::function<cdouble(const CVector&)>;

inline constexpr int kDefaultQuadratureNodes = 64;

/// Physicists' Gauss–Hermite rule for weight e^{−x²}. `scaled_weights` holds
/// w_i e^{x_i²}, which stays finite for every supported m.
struct GaussHermite {
  std::vector<double> nodes;
  std::vector<double> weights;
  std::vector<double> scaled_weights;
};

/// 2 ≤ m ≤ 256. Newton on the orthonormal recurrence; nodes ascending.
GaussHermite gauss_hermite_rule(int m);

/// x = W u + shift over a tensor product of one-dimensional rules.
/// integrate(F) ≈ ∫ F(x) dx, exact when F(Wu + shift) is a polynomial of
/// degree ≤ 2m−1 in u times e^{−uᵀu}.
class QuadratureRule {
 public:
  QuadratureRule(int m, RMatrix whitening, RVector shift);
  QuadratureRule(int m, RMatrix whitening);

  std::size_t dim() const noexcept { return static_cast<std::size_t>(whitening_.rows()); }
  std::size_t size() const noexcept { return size_; }
  const GaussHermite& axis() const noexcept { return rule_; }
  const RMatrix& whitening() const noexcept { return whitening_; }
  const RVector& shift() const noexcept { return shift_; }

  /// Physical node and its full weight (including |det W| and e^{uᵀu}).
  /// Index i runs last-axis-fastest.
  RVector node(std::size_t i) const;
  double weight(std::size_t i) const;
  /// True when node i sits on the outermost node of any axis.
  bool on_boundary(std::size_t i) const;

  cdouble integrate(const Function& f) const;
  /// Weighted sum of precomputed values (values[i] at node(i)), pairwise-summed.
  cdouble sum(std::span<const cdouble> values) const;

  /// Largest |w_i F(x_i)| over boundary nodes divided by the largest over all nodes.
  double tail_ratio(std::span<const cdouble> values) const;

 private:
  GaussHermite rule_;
  RMatrix whitening_;
  RVector shift_;
  double det_w_ = 1.0;
  std::size_t size_ = 0;
};

/// Whitening for an envelope e^{−xᵀPx}: W = P^{-1/2} (P real SPD). Throws
/// ConvergenceError when P is not positive definite.
RMatrix whitening_for(const RMatrix& p);

/// Quadrature envelope matrix of f·g* when both carry e^{−½xᵀΘ⁻¹x}: Re Θ⁻¹.
RMatrix envelope_of(const AnisotropyMatrix& theta_hint);

struct QuadratureResult {
  cdouble value;
  double tail_ratio = 0.0;
  /// Tail above 1e-10 of the peak: the nodes do not cover the integrand.
  bool warning() const noexcept { return tail_ratio > 1e-10; }
};

/// ⟨f, g⟩ = ∫ f g* dx.
QuadratureResult inner_product(const Function& f, const Function& g, const AnisotropyMatrix& theta_hint,
                               int m = kDefaultQuadratureNodes);
/// ∫ f g dx, the pairing under which complex-Θ modes and duals are biorthonormal.
QuadratureResult bilinear_product(const Function& f, const Function& g, const AnisotropyMatrix& theta_hint,
                                  int m = kDefaultQuadratureNodes);

/// G_jk = ⟨f_j, g_k⟩ (or the bilinear pairing), every function sampled once per node.
CMatrix gram(const std::vector<Function>& fs, const std::vector<Function>& gs, const AnisotropyMatrix& theta_hint,
             int m = kDefaultQuadratureNodes, bool conjugate = true);

enum class Pairing { Auto, Hermitian, Bilinear };

struct ExpansionResult {
  ModeExpansion expansion;
  /// ‖f − Σ a_ν HG_ν‖₂ by the same quadrature.
  double residual = 0.0;
  double tail_ratio = 0.0;
};

/// a_ν = ⟨f, H̃G^Θ_ν⟩ for |ν| ≤ max_order. Auto uses the conjugating product for
/// real Θ and the bilinear one otherwise.
ExpansionResult expand(const Function& f, const AnisotropyMatrix& theta, int max_order,
                       int m = kDefaultQuadratureNodes, Pairing pairing = Pairing::Auto);

/// All ν with |ν| ≤ max_order, by total degree then lexicographically descending.
std::vector<MultiIndex> degrees_up_to(std::size_t n, int max_order);

/// Central differences; h must lie in [1e-7, 1e-2].
CVector fd_gradient(const Function& f, const CVector& r, double h = 1e-5);
CMatrix fd_hessian(const Function& f, const CVector& r, double h = 1e-4);
/// Per-axis 5-point stencil.
cdouble fd_laplacian(const Function& f, const CVector& r, double h = 1e-3);

}  // namespace ahg
