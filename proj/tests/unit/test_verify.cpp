#include <algorithm>

#include "ahg/error.hpp"
#include "ahg/parallel.hpp"
#include "ahg/verify.hpp"
#include "doctest.h"

using namespace ahg;

TEST_CASE("suite registry") {
  const auto& names = suite_names();
  CHECK(names.back() == "all");
  for (const char* s : {"orthogonality", "derivatives", "anisotropy", "offset", "product", "lct", "fourier", "frft",
                        "laplace", "eigen", "wvd"})
    CHECK(std::find(names.begin(), names.end(), s) != names.end());
  CHECK_THROWS_AS(run_suite("nope"), UsageError);
}

TEST_CASE("quick suites pass and zero tolerance fails them") {
  const auto ok = run_suite("offset");
  REQUIRE_FALSE(ok.empty());
  for (const auto& c : ok) CHECK(c.passed);
  VerifyOptions strict;
  strict.tolerance = 0.0;
  for (const auto& c : run_suite("offset", strict)) CHECK_FALSE(c.passed);
  VerifyOptions one;
  one.tolerances["offset.shifted_argument"] = 0.0;
  CHECK_FALSE(run_suite("offset", one).front().passed);
  CHECK(format_check(ok.front()).rfind("PASS offset.", 0) == 0);
}

TEST_CASE("parallel_for fills every index once and rethrows") {
  std::vector<int> hits(1000, 0);
  parallel_for(hits.size(), [&](std::size_t i) { hits[i] += 1; }, 4);
  CHECK(std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; }));
  CHECK_THROWS_AS(parallel_for(10, [](std::size_t i) {
                    if (i == 5) throw DomainError("boom");
                  }, 3),
                  DomainError);
}
