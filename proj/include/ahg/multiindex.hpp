#pragma once

// Multi-indices, multi-index matrices and the exhaustive enumerations behind
// the finite re-expansion sums.

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ahg/error.hpp"

namespace ahg {

/// Hard cap on the number of terms any enumeration may produce.
inline constexpr std::size_t kMaxEnumerationTerms = 10'000'000;

/// Fixed-length tuple of natural numbers (a mode degree, a derivative order, ...).
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::vector<int> entries);
  MultiIndex(std::initializer_list<int> entries);

  static MultiIndex zeros(std::size_t n);
  /// ε_k: 1 at position k, 0 elsewhere.
  static MultiIndex unit(std::size_t n, std::size_t k);
  /// Parses "2,1,0". Whitespace around entries is ignored.
  static MultiIndex parse(std::string_view text);

  std::size_t size() const noexcept { return entries_.size(); }
  int operator[](std::size_t k) const { return entries_[k]; }
  std::span<const int> entries() const noexcept { return entries_; }

  /// |ν|
  int degree() const noexcept;
  /// "2,1,0"
  std::string to_string() const;

  /// this − other, or nullopt when any entry would be negative.
  std::optional<MultiIndex> minus(const MultiIndex& other) const;
  MultiIndex operator+(const MultiIndex& other) const;
  /// ν − by·ε_k, or nullopt when negative.
  std::optional<MultiIndex> lowered(std::size_t k, int by = 1) const;
  /// Partial order: this ⪯ other iff every entry is ≤.
  bool precedes(const MultiIndex& other) const;

  auto operator<=>(const MultiIndex&) const = default;
  bool operator==(const MultiIndex&) const = default;

 private:
  std::vector<int> entries_;
};

/// rows × cols grid of naturals, row-major.
class MultiIndexMatrix {
 public:
  MultiIndexMatrix() = default;
  MultiIndexMatrix(std::size_t rows, std::size_t cols);
  MultiIndexMatrix(std::size_t rows, std::size_t cols, std::vector<int> row_major);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  int operator()(std::size_t j, std::size_t k) const { return entries_[j * cols_ + k]; }
  int& operator()(std::size_t j, std::size_t k) { return entries_[j * cols_ + k]; }
  std::span<const int> entries() const noexcept { return entries_; }

  /// Ω𝟙
  MultiIndex row_sums() const;
  /// 𝟙ᵀΩ
  MultiIndex col_sums() const;
  /// ln Ω! = Σ_jk ln ω_jk!
  double factorial_log() const;

  bool operator==(const MultiIndexMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<int> entries_;
};

/// ln ν!
double factorial_log(const MultiIndex& nu);

/// ∏_j ν_j!! with 0!! = (−1)!! = 1. Entries below −1 are a domain error.
double double_factorial(std::span<const int> entries);

/// ∏_j C(ν_j, μ_j); zero unless μ ⪯ ν.
double binom(const MultiIndex& nu, const MultiIndex& mu);

/// ln binom(ν, μ); −∞ when the coefficient vanishes.
double binom_log(const MultiIndex& nu, const MultiIndex& mu);

/// ∏_j (ν_j + 1)
std::size_t count_below(const MultiIndex& nu);

/// ∏_j C(ν_j + rows − 1, rows − 1). Saturates at SIZE_MAX.
std::size_t count_colsum_matrices(const MultiIndex& nu, std::size_t rows);

/// All μ ⪯ ν in lexicographic order (last entry fastest).
std::vector<MultiIndex> enumerate_below(const MultiIndex& nu);

/// Every rows×n matrix whose k-th column sums to ν_k. Ordered lexicographically
/// over the column-major entry sequence, each column's composition taken with
/// its leading entry largest first.
std::vector<MultiIndexMatrix> enumerate_colsum_matrices(const MultiIndex& nu, std::size_t rows);

struct ProductTerm {
  MultiIndexMatrix omega;
  MultiIndex beta;   // ν − Ω𝟙
  MultiIndex gamma;  // μ − 𝟙ᵀΩ
};

/// Every n×n Ω with Ω𝟙 ⪯ ν and 𝟙ᵀΩ ⪯ μ, depth-first over column-major
/// entries with each entry ascending (so Ω = 0 comes first).
std::vector<ProductTerm> enumerate_product_matrices(const MultiIndex& nu, const MultiIndex& mu);

// Lazy visitation. Each visitor is called once per element in the documented
// order; a ResourceError is thrown before (or, for the product enumeration,
// during) the walk when more than kMaxEnumerationTerms elements would result.

namespace detail {
std::vector<std::vector<std::vector<int>>> column_compositions(const MultiIndex& nu, std::size_t rows);
void check_term_guard(std::size_t count);
}  // namespace detail

template <class Visitor>
void for_each_below(const MultiIndex& nu, Visitor&& visit) {
  detail::check_term_guard(count_below(nu));
  std::vector<int> cur(nu.size(), 0);
  while (true) {
    visit(MultiIndex(cur));
    std::size_t k = cur.size();
    while (k > 0) {
      --k;
      if (cur[k] < nu[k]) {
        ++cur[k];
        break;
      }
      cur[k] = 0;
      if (k == 0) return;
    }
    if (cur.empty()) return;
  }
}

template <class Visitor>
void for_each_colsum_matrix(const MultiIndex& nu, std::size_t rows, Visitor&& visit) {
  detail::check_term_guard(count_colsum_matrices(nu, rows));
  const auto comps = detail::column_compositions(nu, rows);
  const std::size_t cols = nu.size();
  std::vector<std::size_t> idx(cols, 0);
  MultiIndexMatrix omega(rows, cols);
  while (true) {
    for (std::size_t k = 0; k < cols; ++k)
      for (std::size_t j = 0; j < rows; ++j) omega(j, k) = comps[k][idx[k]][j];
    visit(static_cast<const MultiIndexMatrix&>(omega));
    std::size_t k = cols;
    bool done = true;
    while (k > 0) {
      --k;
      if (idx[k] + 1 < comps[k].size()) {
        ++idx[k];
        done = false;
        break;
      }
      idx[k] = 0;
    }
    if (done) return;
  }
}

}  // namespace ahg
