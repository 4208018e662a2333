#include <cmath>
#include <numbers>

#include "ahg/hermite1d.hpp"
#include "doctest.h"
#include "reference_values.hpp"

using namespace ahg;

TEST_CASE("univariate modes match frozen high-precision values") {
  for (const auto& c : ref::kHg1) {
    CAPTURE(c.k);
    CAPTURE(c.x);
    const double scale = std::max(1e-3, std::abs(c.value));
    CHECK(std::abs(hg1(c.k, c.x) - c.value) / scale < 1e-12);
  }
}

TEST_CASE("table agrees with single evaluations") {
  std::vector<cdouble> table(41);
  const cdouble z(0.9, -0.2);
  hg1_table(z, table);
  for (int k = 0; k <= 40; ++k) CHECK(std::abs(table[k] - hg1(k, z)) < 1e-14);
}

TEST_CASE("physicists' polynomials and values at zero") {
  CHECK(hermite_poly(0, 0.3) == cdouble(1.0));
  CHECK(std::abs(hermite_poly(3, 0.5) - cdouble(8 * 0.125 - 12 * 0.5)) < 1e-14);
  CHECK(hg1_at_zero(1) == 0.0);
  CHECK(hg1_at_zero(0) == doctest::Approx(std::pow(std::numbers::pi, -0.25)));
  CHECK(hg1_at_zero(2) == doctest::Approx(-std::pow(std::numbers::pi, -0.25) / std::sqrt(2.0)));
}

TEST_CASE("large orders stay finite far from the origin") {
  for (double x : {0.0, 10.0, 30.0, 40.0}) CHECK(std::isfinite(std::abs(hg1(kMaxHermiteOrder, x))));
  CHECK_THROWS_AS(hg1(kMaxHermiteOrder + 1, 0.0), DomainError);
  CHECK_THROWS_AS(hg1(-1, 0.0), DomainError);
}
