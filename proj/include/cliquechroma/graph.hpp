#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cliquechroma/random.hpp"
#include "cliquechroma/vertex_set.hpp"

namespace cliquechroma {

/// Undirected simple graph on {0,...,n-1}, stored as n adjacency bitsets.
///
/// Symmetric with an empty diagonal. Immutable once built; use GraphBuilder
/// to construct one edge at a time.
class Graph {
public:
  Graph() = default;

  std::size_t order() const noexcept { return rows_.size(); }
  std::size_t edge_count() const noexcept { return edges_; }

  const VertexSet &neighbors(Vertex v) const { return rows_.at(v); }
  bool adjacent(Vertex u, Vertex v) const { return rows_[u].contains(v); }
  std::size_t degree(Vertex v) const { return rows_.at(v).size(); }

  VertexSet all_vertices() const { return VertexSet::full(order()); }

  /// Row v is the neighborhood of v.
  std::span<const VertexSet> adjacency() const noexcept { return rows_; }

  /// Edges (u,v), u < v, in lexicographic order.
  std::vector<std::pair<Vertex, Vertex>> edges() const;

  friend bool operator==(const Graph &, const Graph &) = default;

private:
  friend class GraphBuilder;
  friend Graph gen_random_graph(const struct GenParams &params);

  std::vector<VertexSet> rows_;
  std::size_t edges_ = 0;
};

class GraphBuilder {
public:
  explicit GraphBuilder(std::size_t n);

  /// Adds {u,v}. Returns false if the edge was already present.
  /// Throws InputError on a self-loop or an out-of-range endpoint.
  bool add_edge(Vertex u, Vertex v);

  Graph build() &&;

private:
  Graph g_;
};

/// Parameters of the G(n,p) sampler.
struct GenParams {
  std::size_t n = 1;
  double p = 0.5;
  std::uint64_t seed = 0;

  /// Throws InputError unless n >= 1 and 0 <= p <= 1.
  void validate() const;
};

/// Samples G(n,p). Pairs (i,j), i<j, are visited in lexicographic order and
/// each consumes exactly one SplitMix64 word; the edge is present iff the
/// word is below floor(p * 2^64), with p == 1 always present.
Graph gen_random_graph(const GenParams &params);

/// Common non-neighbors of `vs`, excluding the listed vertices themselves.
/// An empty list yields the full vertex set.
VertexSet non_neighbors(const Graph &g, std::span<const Vertex> vs);

/// Members of `within` that are neither v nor adjacent to v.
VertexSet non_neighbors_in(const Graph &g, Vertex v, const VertexSet &within);

struct InducedSubgraph {
  Graph graph;
  /// to_parent[i] is the original label of local vertex i.
  std::vector<Vertex> to_parent;
};

InducedSubgraph induced_subgraph(const Graph &g, const VertexSet &subset);

// Named graphs used by tests, examples and the CLI.
Graph complete_graph(std::size_t n);
Graph empty_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph path_graph(std::size_t n);
Graph petersen_graph();

/// DIMACS-style text: "c" comments, one "p edge <n> <m>" header, then m
/// lines "e <u> <v>" with 1-based endpoints.
Graph read_graph(std::istream &in);
Graph read_graph(std::string_view text);
Graph read_graph_file(const std::string &path);

/// Writes the header and the edges in lexicographic order.
void write_graph(std::ostream &out, const Graph &g);
std::string write_graph(const Graph &g);

} // namespace cliquechroma
