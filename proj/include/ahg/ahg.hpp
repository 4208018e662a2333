#pragma once

// Anisotropic Hermite-Gauss functions HG^Θ_ν, their duals, and the finite
// identities relating them.
//
// Every value is computed through the dimensional decomposition
//
//   HG^Θ_ν(r) = √ν! |Θ|^{-1/4} Σ_{𝟙ᵀΩ=ν} (Θ^{-1/2})^Ω / Ω! · √μ! · ∏_k hg_{μ_k}(s_k),
//
// with s = Θ^{-1/2} r and μ = Ω𝟙. The Ω-sum is collapsed per μ once, when a
// mode is constructed, so evaluation costs one hg table per coordinate plus a
// short dot product.

#include <map>
#include <optional>
#include <vector>

#include "ahg/cmatrix.hpp"
#include "ahg/multiindex.hpp"

namespace ahg {

/// Largest |ν| accepted by the expansion formulas (anisotropy, offset, product).
inline constexpr int kMaxExpansionDegree = 16;

/// √ν! Σ_{𝟙ᵀΩ=ν} T^Ω/Ω! · √μ!, keyed by μ = Ω𝟙 (row sums). Duplicate μ are
/// merged by summation in enumeration order; each term is formed in log domain
/// and exponentiated once.
std::map<MultiIndex, cdouble> reexpansion_coefficients(const CMatrix& t, const MultiIndex& nu);

/// A single basis function: HG^Θ_ν, or the dual H̃G^Θ_ν.
class AhgMode {
 public:
  AhgMode(const AnisotropyMatrix& theta, const MultiIndex& nu, bool dual = false);

  /// The mode ν − by·ε_k, or the canonical zero mode when that degree is negative.
  static AhgMode lowered(const AnisotropyMatrix& theta, const MultiIndex& nu, std::size_t k, int by = 1);
  /// ν − ε_j − ε_k, or zero.
  static AhgMode lowered2(const AnisotropyMatrix& theta, const MultiIndex& nu, std::size_t j, std::size_t k);
  /// Identically zero function on ℂⁿ.
  static AhgMode zero(std::size_t n);

  cdouble operator()(const CVector& r) const;

  std::size_t dim() const noexcept { return dim_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_dual() const noexcept { return dual_; }
  const std::optional<MultiIndex>& degree() const noexcept { return nu_; }
  std::size_t term_count() const noexcept { return terms_.size(); }

 private:
  AhgMode() = default;
  void build_primal(const AnisotropyMatrix& theta, const MultiIndex& nu);

  struct Term {
    std::vector<int> mu;
    cdouble coeff;
  };
  std::size_t dim_ = 0;
  std::optional<MultiIndex> nu_;
  bool dual_ = false;
  CMatrix arg_map_;
  cdouble scale_{1.0, 0.0};
  int table_len_ = 1;
  std::vector<Term> terms_;
};

cdouble eval(const AnisotropyMatrix& theta, const MultiIndex& nu, const CVector& r);
/// H̃G^Θ_ν(r) = |Θ|^{-1/2} HG^{Θ⁻¹}_ν(Θ⁻¹ r)
cdouble eval_dual(const AnisotropyMatrix& theta, const MultiIndex& nu, const CVector& r);

/// Σ_{|ν| ≤ max_order} √(2^{|ν|}/ν!) x^ν HG^Θ_ν(r) (or H̃G when dual).
cdouble generating_sum(const AnisotropyMatrix& theta, const CVector& x, const CVector& r, int max_order,
                       bool dual = false);
/// e^{−½rᵀΘ⁻¹r + xᵀΘ⁻¹(2r−x)} / (πⁿ|Θ|)^{1/4}; the dual variant has xᵀ(2r − Θx).
cdouble generating_closed(const AnisotropyMatrix& theta, const CVector& x, const CVector& r, bool dual = false);

/// HG^Θ_ν(0) summed over Ω with even row sums.
cdouble eval_at_zero(const AnisotropyMatrix& theta, const MultiIndex& nu);

/// φ_ν: k-th entry √(ν_k/2) HG_{ν−ε_k}(r).
CVector lowering_vector(const AnisotropyMatrix& theta, const MultiIndex& nu, const CVector& r);
/// Φ_ν: diagonal √(ν_j(ν_j−1)) HG_{ν−2ε_j}, off-diagonal √(ν_jν_k) HG_{ν−ε_j−ε_k}.
CMatrix lowering_matrix(const AnisotropyMatrix& theta, const MultiIndex& nu, const CVector& r);

/// ∂HG/∂r_j = 2 q_jᵀφ_ν − q_jᵀr HG, q_j the j-th row of Θ⁻¹.
cdouble partial(const AnisotropyMatrix& theta, const MultiIndex& nu, const CVector& r, std::size_t j);
/// Θ⁻¹(2φ_ν − r HG)
CVector gradient(const AnisotropyMatrix& theta, const MultiIndex& nu, const CVector& r);
/// −Θ⁻¹HG + 2Θ⁻¹(Φ_ν − rφᵀ − φrᵀ + ½rrᵀHG)Θ⁻¹
CMatrix hessian(const AnisotropyMatrix& theta, const MultiIndex& nu, const CVector& r);
/// −HG tr Θ⁻¹ + 2 tr(Θ⁻²Φ_ν) + (Θ⁻¹r)ᵀ[HG Θ⁻¹r − 4Θ⁻¹φ_ν], evaluated directly.
cdouble laplacian(const AnisotropyMatrix& theta, const MultiIndex& nu, const CVector& r);

/// Finite linear combination Σ_μ c_μ HG^Θ_μ(A r); A defaults to the identity.
class ModeExpansion {
 public:
  ModeExpansion(AnisotropyMatrix theta, std::map<MultiIndex, cdouble> terms,
                std::optional<CMatrix> argument_map = std::nullopt);

  cdouble operator()(const CVector& r) const;

  const AnisotropyMatrix& theta() const noexcept { return theta_; }
  const std::map<MultiIndex, cdouble>& terms() const noexcept { return terms_; }
  const std::optional<CMatrix>& argument_map() const noexcept { return argument_map_; }
  /// Coefficient of μ; zero when absent.
  cdouble coefficient(const MultiIndex& mu) const;
  int max_degree() const;

 private:
  AnisotropyMatrix theta_;
  std::map<MultiIndex, cdouble> terms_;
  std::optional<CMatrix> argument_map_;
  std::vector<std::pair<AhgMode, cdouble>> modes_;
};

/// HG^{Θ₁}_ν(r) = Σ_μ c_μ HG^{Θ₂}_μ(T r) with T = Θ₂^{1/2} Θ₁^{-1/2}.
ModeExpansion anisotropy_transform(const AnisotropyMatrix& theta1, const AnisotropyMatrix& theta2,
                                   const MultiIndex& nu);

/// HG^Θ_ν(r + s) as a function of r, with the s-dependent factors HG_μ(√2 s) fixed.
class OffsetExpansion {
 public:
  OffsetExpansion(const AnisotropyMatrix& theta, const MultiIndex& nu, const CVector& s);
  cdouble operator()(const CVector& r) const;

 private:
  CMatrix theta_inv_;
  CVector s_;
  cdouble prefactor_;
  std::vector<std::pair<AhgMode, cdouble>> terms_;  // HG_{ν−μ} paired with binom^{1/2}·HG_μ(√2 s)
};

OffsetExpansion offset_expansion(const AnisotropyMatrix& theta, const MultiIndex& nu, const CVector& s);

/// HG_ν HG_μ = e^{−½rᵀΘ⁻¹r} Σ_α c_α HG_α(r), α = β + γ.
class ProductExpansion {
 public:
  ProductExpansion(const AnisotropyMatrix& theta, const MultiIndex& nu, const MultiIndex& mu);
  cdouble operator()(const CVector& r) const;
  const ModeExpansion& series() const noexcept { return series_; }

 private:
  CMatrix theta_inv_;
  ModeExpansion series_;
};

ProductExpansion product_expansion(const AnisotropyMatrix& theta, const MultiIndex& nu, const MultiIndex& mu);

}  // namespace ahg
