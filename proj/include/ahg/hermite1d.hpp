#pragma once

// Univariate Hermite polynomials and normalized Hermite-Gauss functions of a
// complex argument.

#include <complex>
#include <span>

#include "ahg/cmatrix.hpp"

namespace ahg {

/// Library contract on univariate orders.
inline constexpr int kMaxHermiteOrder = 200;

/// Physicists' Hermite polynomial H_k(z) by the three-term recurrence.
cdouble hermite_poly(int k, cdouble z);

/// hg_k(z) = (√π 2^k k!)^{-1/2} e^{-z²/2} H_k(z).
cdouble hg1(int k, cdouble z);

/// Fills out[k] = hg_k(z) for k = 0 .. out.size()-1.
void hg1_table(cdouble z, std::span<cdouble> out);

/// hg_k(0) in closed form: 0 for odd k, (√π 2^k k!)^{-1/2} (−2)^{k/2} (k−1)!! for even k.
double hg1_at_zero(int k);

}  // namespace ahg
