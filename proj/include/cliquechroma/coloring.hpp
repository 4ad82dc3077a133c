#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "cliquechroma/clique.hpp"
#include "cliquechroma/graph.hpp"

namespace cliquechroma {

using Color = std::uint32_t;

/// Total vertex -> color assignment whose color ids are exactly
/// {0,...,palette-1}, each used at least once.
class Coloring {
public:
  Coloring() = default;

  /// Throws InputError unless the ids used are exactly 0..max.
  explicit Coloring(std::vector<Color> colors);

  /// Relabels arbitrary ids to 0..q-1, preserving the relative order of ids.
  static Coloring compacted(const std::vector<Color> &raw);

  std::size_t size() const noexcept { return colors_.size(); }
  std::size_t palette() const noexcept { return palette_; }
  Color operator[](Vertex v) const { return colors_.at(v); }
  const std::vector<Color> &colors() const noexcept { return colors_; }

  VertexSet color_class(Color c) const;

  friend bool operator==(const Coloring &, const Coloring &) = default;

private:
  std::vector<Color> colors_;
  std::size_t palette_ = 0;
};

/// "colors <n> <palette>" followed by n lines "<vertex> <color>", 1-based
/// vertices and 0-based colors.
Coloring read_coloring(std::istream &in);
Coloring read_coloring(std::string_view text);
Coloring read_coloring_file(const std::string &path);
void write_coloring(std::ostream &out, const Coloring &c);
std::string write_coloring(const Coloring &c);

struct Valid {};
struct Violation {
  VertexSet clique;
};
using Verdict = std::variant<Valid, Violation>;

/// Valid iff no maximal clique with at least min_size vertices is
/// monochromatic; otherwise one such clique is returned.
Verdict verify_clique_coloring(const Graph &g, const Coloring &c, std::size_t min_size = kDefaultMinCliqueSize,
                               const CliqueBudget &budget = {});

inline bool is_valid(const Verdict &v) { return std::holds_alternative<Valid>(v); }

struct GreedyStats {
  std::size_t pivot_steps = 0;     ///< pivots used before the remainder became clique-free
  std::size_t remainder_size = 0;  ///< uncolored vertices at that point
  bool merged_tail = false;        ///< the last two classes were merged
};

struct GreedyResult {
  Coloring coloring;
  GreedyStats stats;
};

/// Pivot coloring: while the uncolored set still contains a maximal clique
/// of g, the next vertex in `order` paints all of its uncolored neighbors
/// with a fresh color. Uncolored pivots then share one extra color and the
/// other uncolored vertices another; the two are merged when the union is
/// still free of maximal cliques.
GreedyResult greedy_clique_coloring(const Graph &g, const std::optional<std::vector<Vertex>> &order = std::nullopt,
                                    std::size_t min_size = kDefaultMinCliqueSize, const CliqueBudget &budget = {});

struct ExactOptions {
  std::size_t max_colors = 16;
  std::size_t min_size = kDefaultMinCliqueSize;
  CliqueBudget clique_budget{0, 5'000'000};
  std::uint64_t max_nodes = 0; ///< backtracking nodes, 0 = unlimited
};

struct ExactResult {
  std::size_t chi_c = 0;
  Coloring witness;
};

/// Least q such that the maximal cliques (as hyperedges) admit a q-coloring
/// with no monochromatic hyperedge. Throws ResourceError if no coloring with
/// max_colors colors exists or a budget runs out.
ExactResult exact_chi_c(const Graph &g, const ExactOptions &options = {});

inline constexpr std::size_t kBruteForceMaxOrder = 8;

/// Reference value by exhaustive search over all set partitions of the
/// vertex set, each checked with verify_clique_coloring.
std::size_t brute_force_chi_c(const Graph &g, std::size_t min_size = kDefaultMinCliqueSize);

/// Ordinary chromatic number by exhaustive search (test oracle, n <= 10).
std::size_t brute_force_chromatic_number(const Graph &g);

struct AuditStep {
  Color color = 0;
  std::size_t class_size_in_x = 0;   ///< |Y_j|
  std::size_t x_size = 0;            ///< |X| before the step
  bool meets_class_floor = false;    ///< |Y_j| >= floor * |X|
  std::optional<Vertex> vertex;      ///< v_j; absent on the final step
  std::size_t non_neighbors = 0;     ///< |N0(v_j, Y_j)|
};

struct AuditExhausted {
  VertexSet remaining;                        ///< final X
  std::vector<std::size_t> class_sizes_in_x;  ///< indexed by color
};

struct AuditTrace {
  std::vector<AuditStep> steps;
  std::variant<Violation, AuditExhausted> outcome;

  bool violated() const { return std::holds_alternative<Violation>(outcome); }
};

/// Replays the adversary against a coloring: repeatedly take the unused
/// color class with most vertices in X, look for a maximal clique of g
/// inside it, then shrink X to the common non-neighbors of the vertex
/// (outside the class and the earlier choices) with fewest non-neighbors in
/// the class. `class_floor` (default 1/log2 n) is only recorded per step.
AuditTrace audit_coloring(const Graph &g, const Coloring &c, std::optional<double> class_floor = std::nullopt,
                          std::size_t min_size = kDefaultMinCliqueSize, const CliqueBudget &budget = {});

} // namespace cliquechroma
