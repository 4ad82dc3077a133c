#include <doctest.h>

#include <cmath>
#include <numbers>

#include "cliquechroma/bounds.hpp"
#include "cliquechroma/errors.hpp"

using namespace cliquechroma;
using namespace cliquechroma::bounds;

namespace {

// C(m,k) 2^-C(k,2) (1-2^-k)^(n-m), multiplied out term by term.
double naive_expectation(int n, int m, int k) {
  double binom = 1;
  for (int i = 1; i <= k; ++i)
    binom = binom * (m - k + i) / i;
  double value = binom;
  for (int i = 0; i < k * (k - 1) / 2; ++i)
    value *= 0.5;
  const double miss = 1.0 - 1.0 / static_cast<double>(1 << k);
  for (int i = 0; i < n - m; ++i)
    value *= miss;
  return value;
}

} // namespace

TEST_CASE("theorem 1 range at n = 2^16") {
  const Range r = theorem1_bounds(65536);
  CHECK(r.lower == doctest::Approx(-2.4137).epsilon(1e-4));
  CHECK(r.upper == doctest::Approx(6.2644).epsilon(1e-4));
  const BoundReport report = bound_report(65536, 0.1);
  CHECK(report.at("theorem1_lower").vacuous);
  CHECK_FALSE(report.at("theorem1_upper").vacuous);
}

TEST_CASE("theorem 1 range where ln ln n = 1") {
  // log2 ln n = log2 e there, so the two ends sit 3 log2 e and log2 e / 2
  // below (1/2) log2 n = e / (2 ln 2).
  const double n = std::exp(std::numbers::e);
  const double half_log = std::numbers::e / (2 * std::numbers::ln2);
  const Range r = theorem1_bounds(n);
  CHECK(r.lower == doctest::Approx(half_log - 4.3281).epsilon(1e-4));
  CHECK(r.upper == doctest::Approx(half_log - 0.7213).epsilon(1e-4));
}

TEST_CASE("lower end never exceeds upper end") {
  for (double n = 3; n < 1e300; n *= 1.7) {
    const Range r = theorem1_bounds(n);
    CHECK(r.lower <= r.upper);
  }
}

TEST_CASE("palette size formulas") {
  CHECK(greedy_palette_size(65536, 0.1) == 9);
  CHECK(greedy_palette_size(1024, 0.1) == 6);
  CHECK(adversary_palette_size(65536, 0.1) == -4);
  CHECK(adversary_palette_size(std::ldexp(1.0, 1000), 0.1) == 468);
  CHECK(mmp_upper_bound(65536) == 16);
  CHECK(mmp_upper_bound(1024) == 12);

  const Lemma1Params l = lemma1_params(65536, 0.1);
  CHECK(l.k == 21);
  CHECK(l.nonneighbor_threshold == doctest::Approx(5.09e4).epsilon(2e-3));
  const BoundReport report = bound_report(65536, 0.1);
  CHECK(report.at("lemma1_nonneighbor_threshold").vacuous);
  CHECK(report.at("adversary_palette_size").vacuous);
  CHECK(report.at("greedy_palette_size").value == 9);
  CHECK_FALSE(report.notes.empty());
}

TEST_CASE("argument checks") {
  CHECK_THROWS_AS(theorem1_bounds(2), InputError);
  CHECK_THROWS_AS(greedy_palette_size(1024, 0.5), InputError);
  CHECK_THROWS_AS(greedy_palette_size(1024, 0), InputError);
  CHECK_THROWS_AS(adversary_palette_size(1024, -1), InputError);
  CHECK_THROWS_AS(bound_report(2, 0.1), InputError);
  CHECK_THROWS_AS(expected_dominating_cliques(10, 11, 2), InputError);
  CHECK_THROWS_AS(expected_dominating_cliques(10, 4, 0), InputError);
  CHECK_THROWS_AS(expected_dominating_cliques(10, 4, 5), InputError);
  CHECK_THROWS_AS(bound_report(1024, 0.1).at("missing"), std::out_of_range);
}

TEST_CASE("expected dominating cliques") {
  CHECK(expected_dominating_cliques(40, 12, 3) == doctest::Approx(0.6541).epsilon(1e-4));
  CHECK(expected_dominating_cliques(4, 4, 4) == doctest::Approx(0.015625).epsilon(1e-12));
  CHECK(expected_dominating_cliques(10, 4, 1) == doctest::Approx(0.0625).epsilon(1e-12));
}

TEST_CASE("log-domain expectation matches the naive product") {
  for (int n = 1; n <= 60; ++n)
    for (int m = 1; m <= n; ++m)
      for (int k = 1; k <= m && k <= 12; ++k) {
        const double naive = naive_expectation(n, m, k);
        const double fast = expected_dominating_cliques(n, m, k);
        CHECK(std::abs(fast - naive) <= 1e-10 * naive);
      }
}

TEST_CASE("bounds grow with n") {
  std::int64_t last_mmp = 0, last_greedy = 0;
  for (int e = 4; e <= 60; ++e) {
    const double n = std::ldexp(1.0, e);
    CHECK(mmp_upper_bound(n) >= last_mmp);
    CHECK(greedy_palette_size(n, 0.1) >= last_greedy);
    last_mmp = mmp_upper_bound(n);
    last_greedy = greedy_palette_size(n, 0.1);
  }
}
