#include "ahg/hermite1d.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace ahg {

namespace {

void check_order(int k) {
  if (k < 0 || k > kMaxHermiteOrder)
    throw DomainError("Hermite order " + std::to_string(k) + " outside [0, " + std::to_string(kMaxHermiteOrder) +
                      "]");
}

// π^{-1/4}
const double kPiQuarterInv = std::pow(std::numbers::pi, -0.25);

}  // namespace

cdouble hermite_poly(int k, cdouble z) {
  check_order(k);
  if (k == 0) return 1.0;
  cdouble prev = 1.0, cur = 2.0 * z;
  for (int j = 1; j < k; ++j) {
    const cdouble next = 2.0 * z * cur - 2.0 * static_cast<double>(j) * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

// The table runs the recurrence on H_j / √(2^j j!), which stays O(1) in the
// oscillatory region; the Gaussian and π^{-1/4} are applied once at the end.
void hg1_table(cdouble z, std::span<cdouble> out) {
  if (out.empty()) return;
  check_order(static_cast<int>(out.size()) - 1);
  const cdouble envelope = kPiQuarterInv * std::exp(-0.5 * z * z);
  cdouble prev = 1.0;
  out[0] = envelope;
  if (out.size() == 1) return;
  cdouble cur = std::numbers::sqrt2 * z;
  out[1] = envelope * cur;
  for (std::size_t j = 1; j + 1 < out.size(); ++j) {
    const double jd = static_cast<double>(j);
    const cdouble next = std::sqrt(2.0 / (jd + 1.0)) * z * cur - std::sqrt(jd / (jd + 1.0)) * prev;
    prev = cur;
    cur = next;
    out[j + 1] = envelope * cur;
  }
}

cdouble hg1(int k, cdouble z) {
  check_order(k);
  cdouble table[kMaxHermiteOrder + 1];
  hg1_table(z, std::span<cdouble>(table, static_cast<std::size_t>(k) + 1));
  return table[k];
}

double hg1_at_zero(int k) {
  check_order(k);
  if (k % 2 == 1) return 0.0;
  // log of (√π 2^k k!)^{-1/2} 2^{k/2} (k−1)!!, sign (−1)^{k/2}
  double log_df = 0.0;
  for (int j = k - 1; j > 1; j -= 2) log_df += std::log(static_cast<double>(j));
  const double log_val = -0.5 * (0.5 * std::log(std::numbers::pi) + k * std::numbers::ln2 + std::lgamma(k + 1.0)) +
                         0.5 * k * std::numbers::ln2 + log_df;
  const double sign = (k / 2) % 2 == 0 ? 1.0 : -1.0;
  return sign * std::exp(log_val);
}

}  // namespace ahg
