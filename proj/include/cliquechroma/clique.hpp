#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "cliquechroma/graph.hpp"
#include "cliquechroma/vertex_set.hpp"

namespace cliquechroma {

/// Search limits. Zero means unlimited. Exceeding a limit throws ResourceError.
struct CliqueBudget {
  std::uint64_t max_nodes = 0;
  std::uint64_t max_cliques = 0;
};

/// Smallest clique size treated as "a clique" by the coloring predicates.
inline constexpr std::size_t kDefaultMinCliqueSize = 2;

bool is_clique(const Graph &g, const VertexSet &s);

/// True iff no vertex of g is adjacent to every member of s.
bool is_maximal_in(const Graph &g, const VertexSet &s);

/// Return false from the visitor to stop the enumeration early.
using CliqueVisitor = std::function<bool(const VertexSet &)>;

/// Bron-Kerbosch with Tomita pivoting over all of g. Emits every
/// inclusion-maximal clique with at least `min_size` vertices exactly once,
/// in a deterministic order. Returns the number of cliques emitted.
std::uint64_t for_each_maximal_clique(const Graph &g, std::size_t min_size, const CliqueVisitor &visit,
                                      const CliqueBudget &budget = {});

std::vector<VertexSet> enumerate_maximal_cliques(const Graph &g, std::size_t min_size = kDefaultMinCliqueSize,
                                                 std::optional<std::size_t> limit = std::nullopt,
                                                 const CliqueBudget &budget = {});

/// Some clique S within `within`, |S| >= min_size, that is maximal in the
/// whole of g; nullopt if there is none.
///
/// Runs Bron-Kerbosch on g restricted to `within` with every outside vertex
/// seeded into the exclusion set, so a branch dies as soon as one outside
/// vertex is adjacent to the partial clique and all remaining candidates.
std::optional<VertexSet> contains_maximal_clique(const Graph &g, const VertexSet &within,
                                                 std::size_t min_size = kDefaultMinCliqueSize,
                                                 const CliqueBudget &budget = {});

/// Grows the clique `seed` to a maximal clique of g. At every step the
/// smallest common neighbor inside `prefer` is taken first, otherwise the
/// smallest common neighbor overall. Throws InputError if seed is not a clique.
VertexSet extend_to_maximal(const Graph &g, const VertexSet &seed,
                            const std::optional<VertexSet> &prefer = std::nullopt);

/// Exact search for a k-clique K inside `within` such that every vertex
/// outside `within` has a non-neighbor in K.
std::optional<VertexSet> find_dominating_clique(const Graph &g, const VertexSet &within, std::size_t k,
                                                const CliqueBudget &budget = {});

inline constexpr std::uint64_t kDefaultCountBudget = 100'000'000;

/// Number of k-cliques inside {0,...,m-1} that every vertex >= m fails to
/// be fully adjacent to. Throws ResourceError when C(m,k) exceeds `budget`.
std::uint64_t count_dominating_cliques(const Graph &g, std::size_t m, std::size_t k,
                                       std::uint64_t budget = kDefaultCountBudget);

} // namespace cliquechroma
