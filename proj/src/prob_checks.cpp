#include "cliquechroma/prob_checks.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <string>

#include "cliquechroma/bounds.hpp"
#include "cliquechroma/errors.hpp"
#include "cliquechroma/parallel.hpp"
#include "cliquechroma/random.hpp"

namespace cliquechroma {

Lemma1Verdict lemma1_event_holds(const Graph &g, const VertexSet &y, std::size_t k, double threshold,
                                 const CliqueBudget &budget) {
  if (y.width() != g.order())
    throw InputError("vertex set width does not match graph order");
  if (y.empty())
    throw InputError("lemma1_event_holds: Y must be nonempty");
  if (k < 1)
    throw InputError("lemma1_event_holds: k must be at least 1");

  Lemma1Verdict verdict;
  verdict.min_nonneighbors_ok = true;
  const std::size_t y_size = y.size();
  y.complement().for_each([&](Vertex v) {
    const std::size_t missed = y_size - y.intersection_size(g.neighbors(v));
    if (static_cast<double>(missed) < threshold)
      verdict.min_nonneighbors_ok = false;
  });
  verdict.dominating_clique = find_dominating_clique(g, y, k, budget);
  verdict.bad_event = verdict.min_nonneighbors_ok && !verdict.dominating_clique;
  return verdict;
}

Proportion wilson_interval(std::uint64_t successes, std::uint64_t trials, double z) {
  Proportion p;
  p.successes = successes;
  p.trials = trials;
  if (trials == 0) {
    p.ci_high = 1;
    return p;
  }
  const auto t = static_cast<double>(trials);
  const double f = static_cast<double>(successes) / t;
  const double z2 = z * z;
  const double centre = (f + z2 / (2 * t)) / (1 + z2 / t);
  const double half = z / (1 + z2 / t) * std::sqrt(f * (1 - f) / t + z2 / (4 * t * t));
  p.fraction = f;
  // The bounds are exactly 0 and 1 at the extremes; avoid rounding residue.
  p.ci_low = successes == 0 ? 0.0 : std::max(0.0, centre - half);
  p.ci_high = successes == trials ? 1.0 : std::min(1.0, centre + half);
  p.standard_error = std::sqrt(f * (1 - f) / t);
  return p;
}

Lemma1Estimate estimate_lemma1_probability(const Lemma1EstimateParams &params) {
  if (params.trials < 1)
    throw InputError("trials must be at least 1");
  if (params.y < 1 || params.y > params.n)
    throw InputError("y must satisfy 1 <= y <= n");
  if (params.k < 1)
    throw InputError("k must be at least 1");

  const VertexSet y = VertexSet::prefix(params.n, params.y);
  std::atomic<std::uint64_t> bad{0};
  std::atomic<std::uint64_t> censored{0};
  parallel_for(params.trials, params.workers, [&](std::size_t i) {
    const Graph g = gen_random_graph({params.n, params.p, params.seed + i});
    try {
      if (lemma1_event_holds(g, y, params.k, params.threshold, params.budget).bad_event)
        ++bad;
    } catch (const ResourceError &) {
      ++censored;
    }
  });

  Lemma1Estimate out;
  out.censored = censored;
  out.bad_event = wilson_interval(bad, params.trials - out.censored);
  return out;
}

namespace {

std::vector<Vertex> sample_distinct(SplitMix64 &rng, std::size_t n, std::size_t count) {
  std::vector<Vertex> out;
  out.reserve(count);
  while (out.size() < count) {
    const auto v = static_cast<Vertex>(uniform_below(rng, n));
    if (std::find(out.begin(), out.end(), v) == out.end())
      out.push_back(v);
  }
  return out;
}

/// `count` members of `from`, chosen by a partial Fisher-Yates shuffle.
VertexSet sample_subset(SplitMix64 &rng, const VertexSet &from, std::size_t count) {
  std::vector<Vertex> pool = from.to_vector();
  VertexSet out(from.width());
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t j = i + uniform_below(rng, pool.size() - i);
    std::swap(pool[i], pool[j]);
    out.insert(pool[i]);
  }
  return out;
}

} // namespace

PropertyCReport property_c_spot_check(const Graph &g, const PropertyCOptions &options) {
  const std::size_t n = g.order();
  if (options.samples < 1)
    throw InputError("samples must be at least 1");
  if (options.j_max < 1 || options.j_max >= n)
    throw InputError("j_max must satisfy 1 <= j_max < n");
  if (!options.override_guard) {
    if (n < 3 || static_cast<std::int64_t>(options.j_max) > bounds::adversary_palette_size(static_cast<double>(n), options.eps))
      throw InputError("j_max exceeds the adversary palette size for this n; pass the override to sample anyway");
  }

  const auto dn = static_cast<double>(n);
  const double log_n = std::log2(dn);
  const double threshold = options.threshold.value_or(std::pow(std::log(dn), 2.0 + 2.0 * options.eps) * std::sqrt(dn));

  PropertyCReport report;
  report.threshold = threshold;
  SplitMix64 rng(options.seed);
  for (std::uint64_t s = 0; s < options.samples; ++s) {
    PropertyCSample sample;
    const std::size_t j = 1 + uniform_below(rng, options.j_max);
    sample.vertices = sample_distinct(rng, n, j);
    const VertexSet common = non_neighbors(g, sample.vertices);
    sample.common_non_neighbors = common.size();
    sample.size_floor = dn / std::exp2(static_cast<double>(j)) - 2.0 * std::sqrt(dn) * std::log(dn);
    ++report.samples;

    if (common.empty()) {
      ++report.skipped_empty;
      ++report.condition1_failures;
      report.details.push_back(std::move(sample));
      continue;
    }
    sample.condition1 = static_cast<double>(sample.common_non_neighbors) >= sample.size_floor;
    if (!sample.condition1)
      ++report.condition1_failures;

    sample.y_size = std::max<std::size_t>(
        1, static_cast<std::size_t>(std::ceil(static_cast<double>(sample.common_non_neighbors) / log_n)));
    sample.y_size = std::min(sample.y_size, sample.common_non_neighbors);
    const VertexSet y = sample_subset(rng, common, sample.y_size);

    sample.y_qualifies = true;
    y.complement().for_each([&](Vertex v) {
      const std::size_t missed = sample.y_size - y.intersection_size(g.neighbors(v));
      if (static_cast<double>(missed) < threshold)
        sample.y_qualifies = false;
    });
    if (!sample.y_qualifies) {
      ++report.y_not_qualifying;
    } else {
      ++report.condition2_checked;
      sample.has_maximal_clique = contains_maximal_clique(g, y, options.min_size, options.budget).has_value();
      if (!*sample.has_maximal_clique)
        ++report.condition2_failures;
    }
    report.details.push_back(std::move(sample));
  }
  return report;
}

} // namespace cliquechroma
