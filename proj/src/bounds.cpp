#include "cliquechroma/bounds.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "cliquechroma/errors.hpp"

namespace cliquechroma::bounds {

namespace {

void require_order(double n) {
  if (!(n >= 3) || !std::isfinite(n))
    throw InputError("n must be a finite number >= 3");
}

void require_positive_eps(double eps) {
  if (!(eps > 0) || !std::isfinite(eps))
    throw InputError("eps must be positive");
}

double log2_ln(double n) { return std::log2(std::log(n)); }
double ln_ln(double n) { return std::log(std::log(n)); }

} // namespace

Range theorem1_bounds(double n) {
  require_order(n);
  const double half_log = 0.5 * std::log2(n);
  return {half_log - 3.0 * log2_ln(n), half_log - 0.5 * log2_ln(n)};
}

std::int64_t greedy_palette_size(double n, double eps) {
  require_order(n);
  if (!(eps > 0 && eps < 0.5))
    throw InputError("eps must lie in (0, 1/2)");
  const double s = std::ceil(0.5 * std::log2(n) - (0.5 - eps) * log2_ln(n));
  return static_cast<std::int64_t>(s) + 2;
}

std::int64_t adversary_palette_size(double n, double eps) {
  require_order(n);
  require_positive_eps(eps);
  const double c = 3.0 / std::numbers::ln2 + 5.0 * eps;
  return static_cast<std::int64_t>(std::floor(0.5 * std::log2(n) - c * ln_ln(n)));
}

Lemma1Params lemma1_params(double n, double eps) {
  require_order(n);
  require_positive_eps(eps);
  const double ln_n = std::log(n);
  const double root_n = std::sqrt(n);
  Lemma1Params out;
  out.k = static_cast<std::int64_t>(std::ceil(std::log2(n) + (1.0 / std::numbers::ln2 + 4.0 * eps) * ln_ln(n)));
  out.y_min = std::pow(ln_n, 2.0 + 3.0 * eps) * root_n;
  out.nonneighbor_threshold = std::pow(ln_n, 2.0 + 2.0 * eps) * root_n;
  return out;
}

std::int64_t mmp_upper_bound(double n) {
  require_order(n);
  const double log_n = std::log2(n);
  return static_cast<std::int64_t>(std::ceil((0.5 + 2.0 * log2_ln(n) / log_n) * log_n)) + 1;
}

double log_expected_dominating_cliques(std::int64_t n, std::int64_t m, std::int64_t k) {
  if (!(1 <= k && k <= m && m <= n))
    throw InputError("expected_dominating_cliques requires 1 <= k <= m <= n");
  const auto dn = static_cast<double>(n);
  const auto dm = static_cast<double>(m);
  const auto dk = static_cast<double>(k);
  const double log_binom = std::lgamma(dm + 1) - std::lgamma(dk + 1) - std::lgamma(dm - dk + 1);
  const double log_edges = -0.5 * dk * (dk - 1) * std::numbers::ln2;
  const double log_outside = (dn - dm) * std::log1p(-std::exp2(-dk));
  return log_binom + log_edges + log_outside;
}

double expected_dominating_cliques(std::int64_t n, std::int64_t m, std::int64_t k) {
  return std::exp(log_expected_dominating_cliques(n, m, k));
}

const BoundValue &BoundReport::at(const std::string &name) const {
  for (const BoundValue &v : values)
    if (v.name == name)
      return v;
  throw std::out_of_range("no bound named '" + name + "'");
}

BoundReport bound_report(double n, double eps) {
  require_order(n);
  require_positive_eps(eps);
  BoundReport r;
  r.n = n;
  r.eps = eps;
  auto add = [&](std::string name, double value, bool vacuous) {
    r.values.push_back({std::move(name), value, vacuous || !std::isfinite(value)});
  };
  auto out_of_range = [&](double v) { return v <= 0 || v > n; };

  const Range t = theorem1_bounds(n);
  add("theorem1_lower", t.lower, out_of_range(t.lower));
  add("theorem1_upper", t.upper, out_of_range(t.upper));
  if (eps < 0.5) {
    const auto g = static_cast<double>(greedy_palette_size(n, eps));
    add("greedy_palette_size", g, out_of_range(g));
  } else {
    r.notes.push_back("greedy_palette_size needs eps < 1/2; omitted");
  }
  const auto a = static_cast<double>(adversary_palette_size(n, eps));
  add("adversary_palette_size", a, out_of_range(a));
  const auto mmp = static_cast<double>(mmp_upper_bound(n));
  add("mmp_upper_bound", mmp, out_of_range(mmp));

  const Lemma1Params l = lemma1_params(n, eps);
  add("lemma1_k", static_cast<double>(l.k), out_of_range(static_cast<double>(l.k)));
  add("lemma1_y_min", l.y_min, out_of_range(l.y_min));
  // A vertex typically misses about half of Y, so a threshold above n/2
  // cannot be met by any Y at this n.
  add("lemma1_nonneighbor_threshold", l.nonneighbor_threshold, l.nonneighbor_threshold > n / 2);

  r.notes.push_back("o(1) terms are dropped; values are the asymptotic formulas evaluated at finite n");
  r.notes.push_back("log is base 2, ln is natural");
  return r;
}

} // namespace cliquechroma::bounds
