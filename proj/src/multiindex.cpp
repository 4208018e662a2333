#include "ahg/multiindex.hpp"

#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <sstream>

namespace ahg {

namespace {

void check_natural(const std::vector<int>& entries) {
  for (int v : entries)
    if (v < 0) throw DomainError("multi-index entries must be non-negative");
}

void check_same_length(const MultiIndex& a, const MultiIndex& b) {
  if (a.size() != b.size()) throw UsageError("multi-index length mismatch");
}

double lfact(int k) { return std::lgamma(static_cast<double>(k) + 1.0); }

// Compositions of m into `parts` naturals, leading part largest first.
void compositions(int m, std::size_t parts, std::vector<int>& prefix, std::vector<std::vector<int>>& out) {
  if (parts == 1) {
    prefix.push_back(m);
    out.push_back(prefix);
    prefix.pop_back();
    return;
  }
  for (int first = m; first >= 0; --first) {
    prefix.push_back(first);
    compositions(m - first, parts - 1, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

MultiIndex::MultiIndex(std::vector<int> entries) : entries_(std::move(entries)) { check_natural(entries_); }

MultiIndex::MultiIndex(std::initializer_list<int> entries) : entries_(entries) { check_natural(entries_); }

MultiIndex MultiIndex::zeros(std::size_t n) { return MultiIndex(std::vector<int>(n, 0)); }

MultiIndex MultiIndex::unit(std::size_t n, std::size_t k) {
  std::vector<int> e(n, 0);
  e.at(k) = 1;
  return MultiIndex(std::move(e));
}

MultiIndex MultiIndex::parse(std::string_view text) {
  std::vector<int> out;
  std::string token;
  auto flush = [&] {
    std::size_t b = token.find_first_not_of(" \t");
    std::size_t e = token.find_last_not_of(" \t");
    if (b == std::string::npos) throw UsageError("empty entry in degree string");
    std::string t = token.substr(b, e - b + 1);
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(t, &used);
    } catch (const std::exception&) {
      throw UsageError("bad degree entry '" + t + "'");
    }
    if (used != t.size()) throw UsageError("bad degree entry '" + t + "'");
    if (v < 0) throw UsageError("degree entries must be non-negative");
    out.push_back(v);
    token.clear();
  };
  for (char c : text) {
    if (c == ',')
      flush();
    else
      token.push_back(c);
  }
  flush();
  return MultiIndex(std::move(out));
}

int MultiIndex::degree() const noexcept { return std::accumulate(entries_.begin(), entries_.end(), 0); }

std::string MultiIndex::to_string() const {
  std::ostringstream os;
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    if (k) os << ',';
    os << entries_[k];
  }
  return os.str();
}

std::optional<MultiIndex> MultiIndex::minus(const MultiIndex& other) const {
  check_same_length(*this, other);
  std::vector<int> out(entries_.size());
  for (std::size_t k = 0; k < out.size(); ++k) {
    out[k] = entries_[k] - other.entries_[k];
    if (out[k] < 0) return std::nullopt;
  }
  return MultiIndex(std::move(out));
}

MultiIndex MultiIndex::operator+(const MultiIndex& other) const {
  check_same_length(*this, other);
  std::vector<int> out(entries_.size());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = entries_[k] + other.entries_[k];
  return MultiIndex(std::move(out));
}

std::optional<MultiIndex> MultiIndex::lowered(std::size_t k, int by) const {
  if (entries_.at(k) < by) return std::nullopt;
  std::vector<int> out = entries_;
  out[k] -= by;
  return MultiIndex(std::move(out));
}

bool MultiIndex::precedes(const MultiIndex& other) const {
  check_same_length(*this, other);
  for (std::size_t k = 0; k < entries_.size(); ++k)
    if (entries_[k] > other.entries_[k]) return false;
  return true;
}

MultiIndexMatrix::MultiIndexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, 0) {}

MultiIndexMatrix::MultiIndexMatrix(std::size_t rows, std::size_t cols, std::vector<int> row_major)
    : rows_(rows), cols_(cols), entries_(std::move(row_major)) {
  if (entries_.size() != rows * cols) throw UsageError("multi-index matrix entry count mismatch");
  check_natural(entries_);
}

MultiIndex MultiIndexMatrix::row_sums() const {
  std::vector<int> s(rows_, 0);
  for (std::size_t j = 0; j < rows_; ++j)
    for (std::size_t k = 0; k < cols_; ++k) s[j] += (*this)(j, k);
  return MultiIndex(std::move(s));
}

MultiIndex MultiIndexMatrix::col_sums() const {
  std::vector<int> s(cols_, 0);
  for (std::size_t j = 0; j < rows_; ++j)
    for (std::size_t k = 0; k < cols_; ++k) s[k] += (*this)(j, k);
  return MultiIndex(std::move(s));
}

double MultiIndexMatrix::factorial_log() const {
  double acc = 0.0;
  for (int v : entries_) acc += lfact(v);
  return acc;
}

double factorial_log(const MultiIndex& nu) {
  double acc = 0.0;
  for (int v : nu.entries()) acc += lfact(v);
  return acc;
}

double double_factorial(std::span<const int> entries) {
  double prod = 1.0;
  for (int v : entries) {
    if (v < -1) throw DomainError("double factorial undefined below -1");
    for (int k = v; k > 1; k -= 2) prod *= k;
  }
  return prod;
}

double binom(const MultiIndex& nu, const MultiIndex& mu) {
  check_same_length(nu, mu);
  double prod = 1.0;
  for (std::size_t k = 0; k < nu.size(); ++k) {
    if (mu[k] > nu[k]) return 0.0;
    const int n = nu[k], m = std::min(mu[k], nu[k] - mu[k]);
    double c = 1.0;
    for (int i = 1; i <= m; ++i) c = c * (n - m + i) / i;
    prod *= c < 9e15 ? std::round(c) : c;
  }
  return prod;
}

double binom_log(const MultiIndex& nu, const MultiIndex& mu) {
  check_same_length(nu, mu);
  double acc = 0.0;
  for (std::size_t k = 0; k < nu.size(); ++k) {
    if (mu[k] > nu[k]) return -std::numeric_limits<double>::infinity();
    acc += lfact(nu[k]) - lfact(mu[k]) - lfact(nu[k] - mu[k]);
  }
  return acc;
}

std::size_t count_below(const MultiIndex& nu) {
  std::size_t c = 1;
  for (int v : nu.entries()) {
    if (c > std::numeric_limits<std::size_t>::max() / static_cast<std::size_t>(v + 1))
      return std::numeric_limits<std::size_t>::max();
    c *= static_cast<std::size_t>(v + 1);
  }
  return c;
}

std::size_t count_colsum_matrices(const MultiIndex& nu, std::size_t rows) {
  if (rows == 0) throw UsageError("row count must be positive");
  long double c = 1.0L;
  for (int v : nu.entries()) {
    // C(v + rows - 1, rows - 1)
    long double b = 1.0L;
    const std::size_t r = rows - 1;
    for (std::size_t i = 1; i <= r; ++i) b = b * static_cast<long double>(v + i) / static_cast<long double>(i);
    c *= std::round(b);
  }
  if (c > static_cast<long double>(std::numeric_limits<std::size_t>::max() / 2))
    return std::numeric_limits<std::size_t>::max();
  return static_cast<std::size_t>(std::llround(c));
}

namespace detail {

std::vector<std::vector<std::vector<int>>> column_compositions(const MultiIndex& nu, std::size_t rows) {
  std::vector<std::vector<std::vector<int>>> comps(nu.size());
  std::vector<int> prefix;
  for (std::size_t k = 0; k < nu.size(); ++k) compositions(nu[k], rows, prefix, comps[k]);
  return comps;
}

void check_term_guard(std::size_t count) {
  if (count > kMaxEnumerationTerms)
    throw ResourceError("enumeration would produce " + std::to_string(count) + " terms (limit " +
                        std::to_string(kMaxEnumerationTerms) + ")");
}

}  // namespace detail

std::vector<MultiIndex> enumerate_below(const MultiIndex& nu) {
  std::vector<MultiIndex> out;
  out.reserve(count_below(nu) <= kMaxEnumerationTerms ? count_below(nu) : 0);
  for_each_below(nu, [&](const MultiIndex& mu) { out.push_back(mu); });
  return out;
}

std::vector<MultiIndexMatrix> enumerate_colsum_matrices(const MultiIndex& nu, std::size_t rows) {
  std::vector<MultiIndexMatrix> out;
  for_each_colsum_matrix(nu, rows, [&](const MultiIndexMatrix& om) { out.push_back(om); });
  return out;
}

std::vector<ProductTerm> enumerate_product_matrices(const MultiIndex& nu, const MultiIndex& mu) {
  check_same_length(nu, mu);
  const std::size_t n = nu.size();
  std::vector<ProductTerm> out;
  std::vector<int> row_left(nu.entries().begin(), nu.entries().end());
  std::vector<int> col_left(mu.entries().begin(), mu.entries().end());
  MultiIndexMatrix omega(n, n);

  // entry e walks column-major: j = e % n, k = e / n
  auto recurse = [&](auto&& self, std::size_t e) -> void {
    if (e == n * n) {
      detail::check_term_guard(out.size() + 1);
      out.push_back({omega, MultiIndex(row_left), MultiIndex(col_left)});
      return;
    }
    const std::size_t j = e % n, k = e / n;
    const int cap = std::min(row_left[j], col_left[k]);
    for (int v = 0; v <= cap; ++v) {
      omega(j, k) = v;
      row_left[j] -= v;
      col_left[k] -= v;
      self(self, e + 1);
      row_left[j] += v;
      col_left[k] += v;
    }
    omega(j, k) = 0;
  };
  recurse(recurse, 0);
  return out;
}

}  // namespace ahg
