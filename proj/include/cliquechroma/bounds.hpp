#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cliquechroma::bounds {

// Conventions: log = base 2, ln = natural. Every evaluator drops the
// o(1) terms of the asymptotic statements it evaluates.

struct Range {
  double lower = 0;
  double upper = 0;
};

/// 1/2 log n - 3 log ln n  and  1/2 log n - 1/2 log ln n.  Requires n >= 3.
Range theorem1_bounds(double n);

/// ceil(1/2 log n - (1/2 - eps) log ln n) + 2.  Requires n >= 3, 0 < eps < 1/2.
std::int64_t greedy_palette_size(double n, double eps);

/// floor(1/2 log n - (3/ln 2 + 5 eps) ln ln n), returned raw (may be <= 0).
std::int64_t adversary_palette_size(double n, double eps);

struct Lemma1Params {
  std::int64_t k = 0;                 ///< ceil(log n + (1/ln 2 + 4 eps) ln ln n)
  double y_min = 0;                   ///< (ln n)^(2+3 eps) sqrt(n)
  double nonneighbor_threshold = 0;   ///< (ln n)^(2+2 eps) sqrt(n)
};

Lemma1Params lemma1_params(double n, double eps);

/// ceil((1/2 + 2 log ln n / log n) log n) + 1.
std::int64_t mmp_upper_bound(double n);

/// ln of C(m,k) 2^-C(k,2) (1 - 2^-k)^(n-m). Requires 1 <= k <= m <= n.
double log_expected_dominating_cliques(std::int64_t n, std::int64_t m, std::int64_t k);

/// Expected number of k-cliques in the first m vertices of G(n,1/2) that
/// every later vertex misses at least once.
double expected_dominating_cliques(std::int64_t n, std::int64_t m, std::int64_t k);

struct BoundValue {
  std::string name;
  double value = 0;
  bool vacuous = false;
};

struct BoundReport {
  double n = 0;
  double eps = 0;
  std::vector<BoundValue> values;
  std::vector<std::string> notes;

  const BoundValue &at(const std::string &name) const;
};

/// Every formula above evaluated at (n, eps), each with a vacuity flag.
BoundReport bound_report(double n, double eps);

} // namespace cliquechroma::bounds
