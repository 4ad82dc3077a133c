#include "cliquechroma/clique.hpp"

#include <algorithm>
#include <string>

#include "cliquechroma/errors.hpp"

namespace cliquechroma {

namespace {

constexpr Vertex kNone = ~Vertex{0};

/// g restricted to a vertex subset, relabeled 0..L-1, plus the bipartite
/// adjacency between the subset and everything outside it.
struct SubsetView {
  std::size_t parent_order = 0;
  std::vector<Vertex> to_parent;
  std::vector<Vertex> outside;

  std::vector<VertexSet> owned_rows;
  std::span<const VertexSet> rows;       // local -> local neighbors
  std::vector<VertexSet> outside_rows;   // outside index -> local neighbors
  std::vector<VertexSet> to_outside;     // local -> outside neighbors

  // Where Bron-Kerbosch starts. In the uncompressed layout the outside
  // vertices are ordinary excluded vertices.
  VertexSet initial_candidates;
  VertexSet initial_excluded;

  std::size_t local_order() const { return to_parent.size(); }
  std::size_t outside_order() const { return outside.size(); }

  VertexSet to_parent_set(const std::vector<Vertex> &local) const {
    VertexSet s(parent_order);
    for (Vertex v : local)
      s.insert(to_parent[v]);
    return s;
  }
};

enum class Layout { kAuto, kCompressed };

/// Subsets holding at least 1/kCompressBelow of the vertices are searched
/// in place on the parent rows; smaller ones are relabeled so that their
/// bitsets stay a few words wide.
constexpr std::size_t kCompressBelow = 8;

SubsetView make_view(const Graph &g, const VertexSet &within, Layout layout = Layout::kAuto) {
  if (within.width() != g.order())
    throw InputError("vertex set width does not match graph order");

  SubsetView view;
  view.parent_order = g.order();
  if (layout == Layout::kAuto && within.size() * kCompressBelow >= g.order()) {
    view.to_parent.resize(g.order());
    for (Vertex v = 0; v < g.order(); ++v)
      view.to_parent[v] = v;
    view.rows = g.adjacency();
    view.initial_candidates = within;
    view.initial_excluded = within.complement();
    return view;
  }

  std::vector<Vertex> local_of(g.order(), kNone);
  std::vector<Vertex> outside_of(g.order(), kNone);
  for (Vertex v = 0; v < g.order(); ++v) {
    if (within.contains(v)) {
      local_of[v] = static_cast<Vertex>(view.to_parent.size());
      view.to_parent.push_back(v);
    } else {
      outside_of[v] = static_cast<Vertex>(view.outside.size());
      view.outside.push_back(v);
    }
  }

  const std::size_t local_n = view.local_order();
  const std::size_t outside_n = view.outside_order();
  if (outside_n == 0) {
    view.rows = g.adjacency();
  } else {
    view.owned_rows.assign(local_n, VertexSet(local_n));
    view.to_outside.assign(local_n, VertexSet(outside_n));
    for (Vertex i = 0; i < local_n; ++i) {
      g.neighbors(view.to_parent[i]).for_each([&](Vertex u) {
        if (local_of[u] != kNone)
          view.owned_rows[i].insert(local_of[u]);
        else
          view.to_outside[i].insert(outside_of[u]);
      });
    }
    view.rows = view.owned_rows;
    view.outside_rows.assign(outside_n, VertexSet(local_n));
    for (Vertex i = 0; i < local_n; ++i)
      view.to_outside[i].for_each([&](Vertex x) { view.outside_rows[x].insert(i); });
  }
  view.initial_candidates = VertexSet::full(local_n);
  view.initial_excluded = VertexSet(local_n);
  return view;
}

class NodeCounter {
public:
  explicit NodeCounter(std::uint64_t limit) : limit_(limit) {}

  void tick() {
    if (limit_ && ++count_ > limit_)
      throw ResourceError("search node budget of " + std::to_string(limit_) + " exceeded");
  }

private:
  std::uint64_t limit_;
  std::uint64_t count_ = 0;
};

/// Bron-Kerbosch over a SubsetView. Outside vertices live permanently in
/// the exclusion set, so only cliques maximal in the parent graph are
/// reported.
class MaximalCliqueSearch {
public:
  using LocalVisitor = std::function<bool(const std::vector<Vertex> &)>;

  MaximalCliqueSearch(const SubsetView &view, std::size_t min_size, std::uint64_t max_nodes)
      : view_(view), min_size_(min_size), nodes_(max_nodes) {}

  /// Returns false if the visitor asked to stop.
  bool run(const LocalVisitor &visit) {
    visit_ = &visit;
    VertexSet candidates = view_.initial_candidates;
    VertexSet excluded = view_.initial_excluded;
    VertexSet excluded_outside = VertexSet::full(view_.outside_order());
    return expand(candidates, excluded, excluded_outside);
  }

private:
  bool expand(VertexSet &cand, VertexSet &excl, const VertexSet &excl_out) {
    nodes_.tick();
    const std::size_t cand_n = cand.size();
    if (cand_n == 0) {
      if (excl.empty() && excl_out.empty() && clique_.size() >= min_size_)
        return (*visit_)(clique_);
      return true;
    }
    if (clique_.size() + cand_n < min_size_)
      return true;

    // Some outside vertex adjacent to the whole clique and to every
    // candidate means no maximal clique can be completed here.
    if (!excl_out.empty()) {
      VertexSet common = excl_out;
      for (Vertex v = cand.first(); v < cand.width() && !common.empty(); v = cand.next(v + 1))
        common &= view_.to_outside[v];
      if (!common.empty())
        return true;
    }

    // Tomita pivot over the local vertices: most neighbors in cand.
    const VertexSet *pivot_row = nullptr;
    std::size_t best = 0;
    bool covered = false;
    auto consider = [&](const VertexSet &row, bool is_excluded) {
      const std::size_t c = cand.intersection_size(row);
      if (is_excluded && c == cand_n)
        covered = true;
      if (!pivot_row || c > best) {
        best = c;
        pivot_row = &row;
      }
    };
    for (Vertex v = excl.first(); v < excl.width() && !covered; v = excl.next(v + 1))
      consider(view_.rows[v], true);
    if (covered)
      return true;
    cand.for_each([&](Vertex v) { consider(view_.rows[v], false); });

    const VertexSet branch = cand - *pivot_row;
    for (Vertex v = branch.first(); v < branch.width(); v = branch.next(v + 1)) {
      const VertexSet &row = view_.rows[v];
      VertexSet next_cand = cand & row;
      VertexSet next_excl = excl & row;
      VertexSet next_out = view_.outside_order() ? excl_out & view_.to_outside[v] : excl_out;
      clique_.push_back(v);
      const bool go_on = expand(next_cand, next_excl, next_out);
      clique_.pop_back();
      if (!go_on)
        return false;
      cand.erase(v);
      excl.insert(v);
    }
    return true;
  }

  const SubsetView &view_;
  std::size_t min_size_;
  NodeCounter nodes_;
  const LocalVisitor *visit_ = nullptr;
  std::vector<Vertex> clique_;
};

} // namespace

bool is_clique(const Graph &g, const VertexSet &s) {
  bool ok = true;
  s.for_each([&](Vertex v) {
    if (!ok)
      return;
    VertexSet others = s;
    others.erase(v);
    ok = others.is_subset_of(g.neighbors(v));
  });
  return ok;
}

bool is_maximal_in(const Graph &g, const VertexSet &s) {
  VertexSet common = g.all_vertices();
  s.for_each([&](Vertex v) { common &= g.neighbors(v); });
  return common.empty();
}

std::uint64_t for_each_maximal_clique(const Graph &g, std::size_t min_size, const CliqueVisitor &visit,
                                      const CliqueBudget &budget) {
  if (min_size < 1)
    min_size = 1;
  const SubsetView view = make_view(g, g.all_vertices());
  std::uint64_t emitted = 0;
  MaximalCliqueSearch search(view, min_size, budget.max_nodes);
  search.run([&](const std::vector<Vertex> &local) {
    if (budget.max_cliques && emitted >= budget.max_cliques)
      throw ResourceError("maximal clique budget of " + std::to_string(budget.max_cliques) + " exceeded");
    ++emitted;
    return visit(view.to_parent_set(local));
  });
  return emitted;
}

std::vector<VertexSet> enumerate_maximal_cliques(const Graph &g, std::size_t min_size,
                                                 std::optional<std::size_t> limit, const CliqueBudget &budget) {
  std::vector<VertexSet> out;
  if (limit && *limit == 0)
    return out;
  for_each_maximal_clique(
      g, min_size,
      [&](const VertexSet &c) {
        out.push_back(c);
        return !limit || out.size() < *limit;
      },
      budget);
  return out;
}

std::optional<VertexSet> contains_maximal_clique(const Graph &g, const VertexSet &within, std::size_t min_size,
                                                 const CliqueBudget &budget) {
  if (min_size < 1)
    min_size = 1;
  if (within.width() != g.order())
    throw InputError("vertex set width does not match graph order");
  if (within.size() < min_size)
    return std::nullopt;
  const SubsetView view = make_view(g, within);
  std::optional<VertexSet> found;
  MaximalCliqueSearch search(view, min_size, budget.max_nodes);
  search.run([&](const std::vector<Vertex> &local) {
    found = view.to_parent_set(local);
    return false;
  });
  return found;
}

VertexSet extend_to_maximal(const Graph &g, const VertexSet &seed, const std::optional<VertexSet> &prefer) {
  if (seed.width() != g.order() || (prefer && prefer->width() != g.order()))
    throw InputError("vertex set width does not match graph order");
  if (!is_clique(g, seed))
    throw InputError("extend_to_maximal: seed is not a clique");
  VertexSet clique = seed;
  VertexSet common = g.all_vertices();
  seed.for_each([&](Vertex v) { common &= g.neighbors(v); });
  while (!common.empty()) {
    Vertex pick = common.first();
    if (prefer) {
      const Vertex preferred = (common & *prefer).first();
      if (preferred < g.order())
        pick = preferred;
    }
    clique.insert(pick);
    common &= g.neighbors(pick);
  }
  return clique;
}

namespace {

class DominatingCliqueSearch {
public:
  DominatingCliqueSearch(const SubsetView &view, std::size_t k, std::uint64_t max_nodes)
      : view_(view), k_(k), nodes_(max_nodes) {}

  bool run() {
    VertexSet cand = VertexSet::full(view_.local_order());
    VertexSet uncovered = VertexSet::full(view_.outside_order());
    return extend(cand, uncovered);
  }

  const std::vector<Vertex> &clique() const { return clique_; }

private:
  bool extend(VertexSet &cand, const VertexSet &uncovered) {
    nodes_.tick();
    if (clique_.size() == k_)
      return uncovered.empty();
    if (clique_.size() + cand.size() < k_)
      return false;

    // An uncovered vertex adjacent to every candidate can never be covered.
    bool hopeless = false;
    uncovered.for_each([&](Vertex w) { hopeless = hopeless || cand.is_subset_of(view_.outside_rows[w]); });
    if (hopeless)
      return false;

    // Set-cover heuristic: try first the candidates that miss the most
    // still-uncovered outside vertices.
    std::vector<std::pair<std::size_t, Vertex>> order;
    const std::size_t open = uncovered.size();
    cand.for_each([&](Vertex v) {
      const std::size_t hit = open ? open - uncovered.intersection_size(view_.to_outside[v]) : 0;
      order.emplace_back(hit, v);
    });
    std::stable_sort(order.begin(), order.end(), [](const auto &a, const auto &b) { return a.first > b.first; });

    for (auto [hit, v] : order) {
      if (clique_.size() + cand.size() < k_)
        return false;
      VertexSet next_cand = cand & view_.rows[v];
      VertexSet next_uncovered = open ? uncovered & view_.to_outside[v] : uncovered;
      clique_.push_back(v);
      if (extend(next_cand, next_uncovered))
        return true;
      clique_.pop_back();
      cand.erase(v);
    }
    return false;
  }

  const SubsetView &view_;
  std::size_t k_;
  NodeCounter nodes_;
  std::vector<Vertex> clique_;
};

} // namespace

std::optional<VertexSet> find_dominating_clique(const Graph &g, const VertexSet &within, std::size_t k,
                                                const CliqueBudget &budget) {
  if (k < 1)
    throw InputError("find_dominating_clique: k must be at least 1");
  if (within.width() != g.order())
    throw InputError("vertex set width does not match graph order");
  if (k > within.size())
    return std::nullopt;
  const SubsetView view = make_view(g, within, Layout::kCompressed);
  DominatingCliqueSearch search(view, k, budget.max_nodes);
  if (!search.run())
    return std::nullopt;
  return view.to_parent_set(search.clique());
}

namespace {

double binomial(std::size_t n, std::size_t k) {
  double r = 1.0;
  for (std::size_t i = 1; i <= k; ++i)
    r = r * static_cast<double>(n - k + i) / static_cast<double>(i);
  return r;
}

void count_cliques_rec(const Graph &g, const VertexSet &outside, std::size_t remaining, Vertex from,
                       const VertexSet &cand, const VertexSet &common, std::uint64_t &count) {
  if (remaining == 0) {
    if (!common.intersects(outside))
      ++count;
    return;
  }
  for (Vertex v = cand.next(from); v < cand.width(); v = cand.next(v + 1)) {
    const VertexSet &row = g.neighbors(v);
    count_cliques_rec(g, outside, remaining - 1, v + 1, cand & row, common & row, count);
  }
}

} // namespace

std::uint64_t count_dominating_cliques(const Graph &g, std::size_t m, std::size_t k, std::uint64_t budget) {
  if (k < 1 || k > m || m > g.order())
    throw InputError("count_dominating_cliques requires 1 <= k <= m <= n");
  if (binomial(m, k) > static_cast<double>(budget))
    throw ResourceError("C(" + std::to_string(m) + "," + std::to_string(k) + ") exceeds the enumeration budget");
  const VertexSet prefix = VertexSet::prefix(g.order(), m);
  const VertexSet outside = prefix.complement();
  std::uint64_t count = 0;
  count_cliques_rec(g, outside, k, 0, prefix, g.all_vertices(), count);
  return count;
}

} // namespace cliquechroma
