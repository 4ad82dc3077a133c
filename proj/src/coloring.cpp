#include "cliquechroma/coloring.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "cliquechroma/errors.hpp"

namespace cliquechroma {

Coloring::Coloring(std::vector<Color> colors) : colors_(std::move(colors)) {
  if (colors_.empty())
    return;
  const Color top = *std::max_element(colors_.begin(), colors_.end());
  std::vector<bool> seen(static_cast<std::size_t>(top) + 1, false);
  for (Color c : colors_)
    seen[c] = true;
  if (std::find(seen.begin(), seen.end(), false) != seen.end())
    throw InputError("coloring leaves a color id between 0 and " + std::to_string(top) + " unused");
  palette_ = static_cast<std::size_t>(top) + 1;
}

Coloring Coloring::compacted(const std::vector<Color> &raw) {
  std::map<Color, Color> relabel;
  for (Color c : raw)
    relabel.emplace(c, 0);
  Color next = 0;
  for (auto &[from, to] : relabel)
    to = next++;
  std::vector<Color> out(raw.size());
  std::transform(raw.begin(), raw.end(), out.begin(), [&](Color c) { return relabel.at(c); });
  return Coloring(std::move(out));
}

VertexSet Coloring::color_class(Color c) const {
  VertexSet s(colors_.size());
  for (Vertex v = 0; v < colors_.size(); ++v)
    if (colors_[v] == c)
      s.insert(v);
  return s;
}

Coloring read_coloring(std::istream &in) {
  std::string line;
  std::size_t lineno = 0;
  bool have_header = false;
  std::size_t n = 0, palette = 0, seen = 0;
  std::vector<Color> colors;
  std::vector<bool> assigned;

  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first) || first == "c")
      continue;
    std::string rest;
    if (!have_header) {
      long long nn = 0, pp = 0;
      if (first != "colors" || !(ls >> nn >> pp) || (ls >> rest) || nn < 1 || pp < 1)
        throw ParseError(lineno, "malformed header, expected 'colors <n> <palette>'");
      n = static_cast<std::size_t>(nn);
      palette = static_cast<std::size_t>(pp);
      colors.assign(n, 0);
      assigned.assign(n, false);
      have_header = true;
      continue;
    }
    long long v = 0, c = 0;
    std::istringstream entry(line);
    if (!(entry >> v >> c) || (entry >> rest))
      throw ParseError(lineno, "malformed entry, expected '<vertex> <color>'");
    if (v < 1 || static_cast<std::size_t>(v) > n)
      throw ParseError(lineno, "vertex index out of range 1.." + std::to_string(n));
    if (c < 0 || static_cast<std::size_t>(c) >= palette)
      throw ParseError(lineno, "color out of range 0.." + std::to_string(palette - 1));
    if (assigned[static_cast<std::size_t>(v - 1)])
      throw ParseError(lineno, "vertex " + std::to_string(v) + " colored twice");
    assigned[static_cast<std::size_t>(v - 1)] = true;
    colors[static_cast<std::size_t>(v - 1)] = static_cast<Color>(c);
    ++seen;
  }
  if (!have_header)
    throw ParseError(lineno, "missing 'colors' header");
  if (seen != n)
    throw ParseError(lineno, "expected " + std::to_string(n) + " vertex lines, found " + std::to_string(seen));
  try {
    Coloring out(std::move(colors));
    if (out.palette() != palette)
      throw ParseError(lineno, "header palette " + std::to_string(palette) + " but " +
                                   std::to_string(out.palette()) + " colors used");
    return out;
  } catch (const InputError &e) {
    throw ParseError(lineno, e.what());
  }
}

Coloring read_coloring(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_coloring(in);
}

Coloring read_coloring_file(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw InputError("cannot open coloring file '" + path + "'");
  return read_coloring(in);
}

void write_coloring(std::ostream &out, const Coloring &c) {
  out << "colors " << c.size() << ' ' << c.palette() << '\n';
  for (Vertex v = 0; v < c.size(); ++v)
    out << v + 1 << ' ' << c[v] << '\n';
}

std::string write_coloring(const Coloring &c) {
  std::ostringstream out;
  write_coloring(out, c);
  return out.str();
}

Verdict verify_clique_coloring(const Graph &g, const Coloring &c, std::size_t min_size, const CliqueBudget &budget) {
  if (c.size() != g.order())
    throw InputError("coloring has " + std::to_string(c.size()) + " entries for a graph of order " +
                     std::to_string(g.order()));
  // A monochromatic maximal clique lies inside one class, so it suffices to
  // search each class for a clique that is maximal in g.
  for (Color col = 0; col < c.palette(); ++col) {
    if (auto clique = contains_maximal_clique(g, c.color_class(col), min_size, budget))
      return Violation{std::move(*clique)};
  }
  return Valid{};
}

GreedyResult greedy_clique_coloring(const Graph &g, const std::optional<std::vector<Vertex>> &order,
                                    std::size_t min_size, const CliqueBudget &budget) {
  const std::size_t n = g.order();
  std::vector<Vertex> pivots(n);
  if (order) {
    if (order->size() != n)
      throw InputError("pivot order must be a permutation of the vertices");
    std::vector<bool> seen(n, false);
    for (Vertex v : *order) {
      if (v >= n || seen[v])
        throw InputError("pivot order must be a permutation of the vertices");
      seen[v] = true;
    }
    pivots = *order;
  } else {
    std::iota(pivots.begin(), pivots.end(), Vertex{0});
  }

  constexpr Color kUncolored = ~Color{0};
  std::vector<Color> raw(n, kUncolored);
  VertexSet uncolored = g.all_vertices();
  VertexSet used_pivots(n);
  Color next = 0;
  GreedyStats stats;

  while (contains_maximal_clique(g, uncolored, min_size, budget)) {
    if (stats.pivot_steps == n)
      throw std::logic_error("greedy_clique_coloring: uncolored set not clique-free after n pivots");
    const Vertex pivot = pivots[stats.pivot_steps++];
    used_pivots.insert(pivot);
    const VertexSet paint = uncolored & g.neighbors(pivot);
    if (paint.empty())
      continue;
    paint.for_each([&](Vertex u) { raw[u] = next; });
    uncolored -= paint;
    ++next;
  }
  stats.remainder_size = uncolored.size();

  // Uncolored pivots are pairwise non-adjacent. Merging them with the rest
  // needs the union to be free of maximal cliques, and the union is exactly
  // the set the loop condition has just cleared.
  const VertexSet tail_pivots = uncolored & used_pivots;
  const VertexSet tail_rest = uncolored - used_pivots;
  uncolored.for_each([&](Vertex u) { raw[u] = next; });
  stats.merged_tail = !tail_pivots.empty() && !tail_rest.empty();

  return {Coloring::compacted(raw), stats};
}

namespace {

class HypergraphColorer {
public:
  HypergraphColorer(std::size_t n, const std::vector<VertexSet> &edges, std::uint64_t max_nodes)
      : n_(n), closing_(n), colors_(n, 0), max_nodes_(max_nodes) {
    // Each hyperedge is checked once, when its last vertex is assigned.
    for (const VertexSet &e : edges) {
      std::vector<Vertex> members = e.to_vector();
      const Vertex last = members.back();
      closing_[last].push_back(std::move(members));
    }
  }

  bool solve(std::size_t q) {
    q_ = q;
    return assign(0, 0);
  }

  const std::vector<Color> &colors() const { return colors_; }

private:
  bool assign(Vertex v, std::size_t used) {
    if (v == n_)
      return true;
    if (max_nodes_ && ++nodes_ > max_nodes_)
      throw ResourceError("backtracking node budget of " + std::to_string(max_nodes_) + " exceeded");
    // Symmetry breaking: colors are opened in order, so v may use an
    // existing color or the next unused one.
    const std::size_t limit = std::min(used + 1, q_);
    for (Color c = 0; c < limit; ++c) {
      colors_[v] = c;
      if (!closes_monochromatic(v) && assign(v + 1, std::max(used, static_cast<std::size_t>(c) + 1)))
        return true;
    }
    return false;
  }

  bool closes_monochromatic(Vertex v) const {
    for (const auto &edge : closing_[v]) {
      const Color c = colors_[edge.front()];
      if (std::all_of(edge.begin(), edge.end(), [&](Vertex u) { return colors_[u] == c; }))
        return true;
    }
    return false;
  }

  std::size_t n_;
  std::vector<std::vector<std::vector<Vertex>>> closing_;
  std::vector<Color> colors_;
  std::size_t q_ = 0;
  std::uint64_t max_nodes_;
  std::uint64_t nodes_ = 0;
};

} // namespace

ExactResult exact_chi_c(const Graph &g, const ExactOptions &options) {
  const std::vector<VertexSet> edges =
      enumerate_maximal_cliques(g, options.min_size, std::nullopt, options.clique_budget);
  HypergraphColorer colorer(g.order(), edges, options.max_nodes);
  for (std::size_t q = 1; q <= options.max_colors; ++q) {
    if (colorer.solve(q))
      return {q, Coloring::compacted(colorer.colors())};
  }
  throw ResourceError("no clique coloring with at most " + std::to_string(options.max_colors) +
                      " colors found within budget");
}

namespace {

/// Calls f on every restricted growth string of length n (every set
/// partition, with classes numbered by first occurrence).
template <class F> void for_each_partition(std::size_t n, F &&f) {
  std::vector<Color> rgs(n, 0);
  std::vector<Color> prefix_max(n, 0);
  while (true) {
    f(rgs);
    std::size_t i = n;
    while (i > 1) {
      --i;
      if (rgs[i] <= prefix_max[i - 1]) {
        ++rgs[i];
        prefix_max[i] = std::max(prefix_max[i - 1], rgs[i]);
        for (std::size_t j = i + 1; j < n; ++j) {
          rgs[j] = 0;
          prefix_max[j] = prefix_max[i];
        }
        break;
      }
      if (i == 1)
        return;
    }
    if (n <= 1)
      return;
  }
}

} // namespace

std::size_t brute_force_chi_c(const Graph &g, std::size_t min_size) {
  const std::size_t n = g.order();
  if (n > kBruteForceMaxOrder)
    throw ResourceError("brute_force_chi_c is limited to n <= " + std::to_string(kBruteForceMaxOrder));
  if (n == 0)
    return 0;
  std::size_t best = n + 1;
  for_each_partition(n, [&](const std::vector<Color> &rgs) {
    const std::size_t q = static_cast<std::size_t>(*std::max_element(rgs.begin(), rgs.end())) + 1;
    if (q >= best)
      return;
    if (is_valid(verify_clique_coloring(g, Coloring(rgs), min_size)))
      best = q;
  });
  return best;
}

std::size_t brute_force_chromatic_number(const Graph &g) {
  const std::size_t n = g.order();
  if (n > 10)
    throw ResourceError("brute_force_chromatic_number is limited to n <= 10");
  if (n == 0)
    return 0;
  std::size_t best = n + 1;
  for_each_partition(n, [&](const std::vector<Color> &rgs) {
    const std::size_t q = static_cast<std::size_t>(*std::max_element(rgs.begin(), rgs.end())) + 1;
    if (q >= best)
      return;
    for (auto [u, v] : g.edges())
      if (rgs[u] == rgs[v])
        return;
    best = q;
  });
  return best;
}

AuditTrace audit_coloring(const Graph &g, const Coloring &c, std::optional<double> class_floor, std::size_t min_size,
                          const CliqueBudget &budget) {
  const std::size_t n = g.order();
  if (c.size() != n)
    throw InputError("coloring has " + std::to_string(c.size()) + " entries for a graph of order " +
                     std::to_string(n));
  const double floor_fraction = class_floor.value_or(n >= 2 ? 1.0 / std::log2(static_cast<double>(n)) : 1.0);

  std::vector<VertexSet> classes;
  classes.reserve(c.palette());
  for (Color col = 0; col < c.palette(); ++col)
    classes.push_back(c.color_class(col));

  AuditTrace trace;
  VertexSet x = g.all_vertices();
  VertexSet chosen(n);
  std::vector<bool> class_used(c.palette(), false);

  auto exhausted = [&] {
    AuditExhausted out{x, {}};
    for (const VertexSet &cls : classes)
      out.class_sizes_in_x.push_back(cls.intersection_size(x));
    trace.outcome = std::move(out);
    return trace;
  };

  while (true) {
    std::optional<Color> pick;
    std::size_t pick_size = 0;
    for (Color col = 0; col < c.palette(); ++col) {
      if (class_used[col])
        continue;
      const std::size_t s = classes[col].intersection_size(x);
      if (!pick || s > pick_size) {
        pick = col;
        pick_size = s;
      }
    }
    if (!pick || pick_size == 0)
      return exhausted();

    const VertexSet y = classes[*pick] & x;
    AuditStep step;
    step.color = *pick;
    step.class_size_in_x = pick_size;
    step.x_size = x.size();
    step.meets_class_floor = static_cast<double>(pick_size) >= floor_fraction * static_cast<double>(step.x_size);
    class_used[*pick] = true;

    if (auto clique = contains_maximal_clique(g, y, min_size, budget)) {
      trace.steps.push_back(step);
      trace.outcome = Violation{std::move(*clique)};
      return trace;
    }

    const VertexSet eligible = (y | chosen).complement();
    std::optional<Vertex> best;
    std::size_t best_count = 0;
    eligible.for_each([&](Vertex v) {
      const std::size_t count = y.size() - y.intersection_size(g.neighbors(v));
      if (!best || count < best_count) {
        best = v;
        best_count = count;
      }
    });
    if (!best) {
      trace.steps.push_back(step);
      return exhausted();
    }
    step.vertex = *best;
    step.non_neighbors = best_count;
    trace.steps.push_back(step);
    chosen.insert(*best);
    x -= g.neighbors(*best);
    x.erase(*best);
  }
}

} // namespace cliquechroma
