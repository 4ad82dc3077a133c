#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "cliquechroma/clique.hpp"
#include "cliquechroma/graph.hpp"

namespace cliquechroma {

/// The two conditions of the dominating-clique lemma for one graph and one Y.
struct Lemma1Verdict {
  /// Every vertex outside Y has at least `threshold` non-neighbors in Y.
  bool min_nonneighbors_ok = false;
  /// A k-clique in Y that every outside vertex misses at least once.
  std::optional<VertexSet> dominating_clique;
  /// min_nonneighbors_ok and no dominating clique.
  bool bad_event = false;
};

Lemma1Verdict lemma1_event_holds(const Graph &g, const VertexSet &y, std::size_t k, double threshold,
                                 const CliqueBudget &budget = {});

/// Wilson score interval for a binomial proportion.
struct Proportion {
  std::uint64_t successes = 0;
  std::uint64_t trials = 0;
  double fraction = 0;
  double ci_low = 0;
  double ci_high = 0;
  /// sqrt(f(1-f)/trials)
  double standard_error = 0;
};

Proportion wilson_interval(std::uint64_t successes, std::uint64_t trials, double z = 1.959963984540054);

struct Lemma1EstimateParams {
  std::size_t n = 0;
  std::size_t y = 0;
  std::size_t k = 1;
  double threshold = 0;
  std::uint64_t trials = 1;
  std::uint64_t seed = 0;
  double p = 0.5;
  CliqueBudget budget{};
  std::size_t workers = 0; ///< 0 = hardware concurrency
};

struct Lemma1Estimate {
  Proportion bad_event;       ///< over completed trials
  std::uint64_t censored = 0; ///< trials whose search exceeded the budget
};

/// Monte Carlo frequency of the bad event with Y = {0,...,y-1}. Trial i
/// samples G(n,p) with seed `seed + i`; results do not depend on `workers`.
Lemma1Estimate estimate_lemma1_probability(const Lemma1EstimateParams &params);

struct PropertyCOptions {
  double eps = 0.1;
  std::size_t j_max = 1;
  std::uint64_t samples = 1;
  std::uint64_t seed = 0;
  /// Per-vertex non-neighbor threshold for Y; defaults to (ln n)^(2+2eps) sqrt(n).
  std::optional<double> threshold;
  /// Allow j_max above the adversary palette size for this n.
  bool override_guard = false;
  std::size_t min_size = kDefaultMinCliqueSize;
  CliqueBudget budget{};
};

struct PropertyCSample {
  std::vector<Vertex> vertices;
  std::size_t common_non_neighbors = 0;
  double size_floor = 0;            ///< n/2^j - 2 sqrt(n) ln n
  bool condition1 = false;
  std::size_t y_size = 0;
  bool y_qualifies = false;         ///< every outside vertex meets the threshold
  std::optional<bool> has_maximal_clique;
};

struct PropertyCReport {
  std::uint64_t samples = 0;
  std::uint64_t condition1_failures = 0;
  std::uint64_t condition2_failures = 0;
  std::uint64_t skipped_empty = 0;     ///< N0 was empty; also a condition-1 failure
  std::uint64_t y_not_qualifying = 0;
  std::uint64_t condition2_checked = 0;
  double threshold = 0;
  std::vector<PropertyCSample> details;
};

/// Sampled check of the threatened-set property: random tuples v_1..v_j,
/// their common non-neighborhood, and one random Y of size
/// ceil(|N0| / log n) inside it. Covers a sample of (tuple, Y) pairs only.
PropertyCReport property_c_spot_check(const Graph &g, const PropertyCOptions &options);

} // namespace cliquechroma
