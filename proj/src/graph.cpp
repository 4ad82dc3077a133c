#include "cliquechroma/graph.hpp"

#include <array>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "cliquechroma/errors.hpp"

namespace cliquechroma {

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(edges_);
  for (Vertex u = 0; u < order(); ++u) {
    const VertexSet &row = rows_[u];
    for (Vertex v = row.next(u + 1); v < order(); v = row.next(v + 1))
      out.emplace_back(u, v);
  }
  return out;
}

GraphBuilder::GraphBuilder(std::size_t n) { g_.rows_.assign(n, VertexSet(n)); }

bool GraphBuilder::add_edge(Vertex u, Vertex v) {
  const std::size_t n = g_.rows_.size();
  if (u >= n || v >= n)
    throw InputError("edge endpoint out of range");
  if (u == v)
    throw InputError("self-loop on vertex " + std::to_string(u));
  if (g_.rows_[u].contains(v))
    return false;
  g_.rows_[u].insert(v);
  g_.rows_[v].insert(u);
  ++g_.edges_;
  return true;
}

Graph GraphBuilder::build() && { return std::move(g_); }

void GenParams::validate() const {
  if (n < 1)
    throw InputError("n must be at least 1");
  if (!(p >= 0.0 && p <= 1.0))
    throw InputError("p must lie in [0,1]");
}

namespace {

/// In-place transpose of a 64x64 bit matrix (bit j of word i <-> bit i of word j).
void transpose_tile(std::array<VertexSet::Word, VertexSet::kWordBits> &m) {
  VertexSet::Word mask = 0x00000000ffffffffULL;
  for (std::size_t width = 32; width != 0; width >>= 1, mask ^= mask << width) {
    for (std::size_t k = 0; k < 64; k = ((k | width) + 1) & ~width) {
      const VertexSet::Word t = ((m[k] >> width) ^ m[k | width]) & mask;
      m[k] ^= t << width;
      m[k | width] ^= t;
    }
  }
}

} // namespace

Graph gen_random_graph(const GenParams &params) {
  params.validate();
  const bool always = params.p == 1.0;
  // Exact: scaling by a power of two does not round.
  const auto threshold = static_cast<std::uint64_t>(std::floor(std::ldexp(params.p, 64)));

  SplitMix64 rng(params.seed);
  Graph g = GraphBuilder(params.n).build();
  // Upper triangle a word at a time, then mirror.
  for (Vertex i = 0; i < params.n; ++i) {
    auto words = g.rows_[i].words();
    for (Vertex j = i + 1; j < params.n; ++j) {
      const auto bit = static_cast<VertexSet::Word>(always | (rng() < threshold));
      words[j / VertexSet::kWordBits] |= bit << (j % VertexSet::kWordBits);
    }
  }
  const std::size_t blocks = VertexSet::word_count(params.n);
  std::array<VertexSet::Word, VertexSet::kWordBits> tile{};
  for (std::size_t bi = 0; bi < blocks; ++bi) {
    for (std::size_t bj = bi; bj < blocks; ++bj) {
      for (std::size_t a = 0; a < VertexSet::kWordBits; ++a) {
        const std::size_t row = bi * VertexSet::kWordBits + a;
        tile[a] = row < params.n ? g.rows_[row].words()[bj] : 0;
        if (bi == bj) // keep only the strict upper triangle of a diagonal tile
          tile[a] &= ~((VertexSet::Word{2} << a) - 1);
      }
      transpose_tile(tile);
      for (std::size_t b = 0; b < VertexSet::kWordBits; ++b) {
        const std::size_t row = bj * VertexSet::kWordBits + b;
        if (row < params.n)
          g.rows_[row].words()[bi] |= tile[b];
      }
    }
  }
  for (const VertexSet &row : g.rows_)
    g.edges_ += row.size();
  g.edges_ /= 2;
  return g;
}

VertexSet non_neighbors(const Graph &g, std::span<const Vertex> vs) {
  VertexSet out = g.all_vertices();
  VertexSet listed(g.order());
  for (Vertex v : vs) {
    if (v >= g.order())
      throw InputError("vertex " + std::to_string(v) + " out of range");
    if (listed.contains(v))
      throw InputError("duplicate vertex " + std::to_string(v));
    listed.insert(v);
  }
  for (Vertex v : vs) {
    out -= g.neighbors(v);
    out.erase(v);
  }
  return out;
}

VertexSet non_neighbors_in(const Graph &g, Vertex v, const VertexSet &within) {
  if (v >= g.order())
    throw InputError("vertex " + std::to_string(v) + " out of range");
  if (within.width() != g.order())
    throw InputError("vertex set width does not match graph order");
  VertexSet out = within - g.neighbors(v);
  out.erase(v);
  return out;
}

InducedSubgraph induced_subgraph(const Graph &g, const VertexSet &subset) {
  if (subset.width() != g.order())
    throw InputError("vertex set width does not match graph order");
  InducedSubgraph out;
  out.to_parent = subset.to_vector();
  if (out.to_parent.empty())
    throw InputError("induced subgraph of an empty vertex set");
  GraphBuilder b(out.to_parent.size());
  for (Vertex i = 0; i < out.to_parent.size(); ++i)
    for (Vertex j = i + 1; j < out.to_parent.size(); ++j)
      if (g.adjacent(out.to_parent[i], out.to_parent[j]))
        b.add_edge(i, j);
  out.graph = std::move(b).build();
  return out;
}

Graph complete_graph(std::size_t n) {
  GraphBuilder b(n);
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j)
      b.add_edge(i, j);
  return std::move(b).build();
}

Graph empty_graph(std::size_t n) { return GraphBuilder(n).build(); }

Graph cycle_graph(std::size_t n) {
  GraphBuilder b(n);
  for (Vertex i = 0; i + 1 < n; ++i)
    b.add_edge(i, i + 1);
  if (n >= 3)
    b.add_edge(static_cast<Vertex>(n - 1), 0);
  return std::move(b).build();
}

Graph path_graph(std::size_t n) {
  GraphBuilder b(n);
  for (Vertex i = 0; i + 1 < n; ++i)
    b.add_edge(i, i + 1);
  return std::move(b).build();
}

Graph petersen_graph() {
  GraphBuilder b(10);
  for (Vertex i = 0; i < 5; ++i) {
    b.add_edge(i, (i + 1) % 5);         // outer cycle
    b.add_edge(i, i + 5);               // spokes
    b.add_edge(i + 5, (i + 2) % 5 + 5); // inner pentagram
  }
  return std::move(b).build();
}

namespace {

bool parse_index(std::istringstream &ls, long long &out) {
  if (!(ls >> out))
    return false;
  return true;
}

bool only_whitespace_left(std::istringstream &ls) {
  std::string rest;
  return !(ls >> rest);
}

} // namespace

Graph read_graph(std::istream &in) {
  std::string line;
  std::size_t lineno = 0;
  bool have_header = false;
  std::size_t n = 0, m = 0, seen = 0;
  GraphBuilder b(0);

  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r')
      line.pop_back();
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag) || tag == "c")
      continue;

    if (tag == "p") {
      std::string kind;
      long long nn = 0, mm = 0;
      if (have_header)
        throw ParseError(lineno, "duplicate header");
      if (!(ls >> kind) || kind != "edge" || !parse_index(ls, nn) || !parse_index(ls, mm) ||
          !only_whitespace_left(ls) || nn < 1 || mm < 0)
        throw ParseError(lineno, "malformed header, expected 'p edge <n> <m>'");
      n = static_cast<std::size_t>(nn);
      m = static_cast<std::size_t>(mm);
      if (m > n * (n - 1) / 2)
        throw ParseError(lineno, "edge count exceeds n(n-1)/2");
      b = GraphBuilder(n);
      have_header = true;
    } else if (tag == "e") {
      if (!have_header)
        throw ParseError(lineno, "edge line before header");
      long long u = 0, v = 0;
      if (!parse_index(ls, u) || !parse_index(ls, v) || !only_whitespace_left(ls))
        throw ParseError(lineno, "malformed edge, expected 'e <u> <v>'");
      if (u < 1 || v < 1 || static_cast<std::size_t>(u) > n || static_cast<std::size_t>(v) > n)
        throw ParseError(lineno, "vertex index out of range 1.." + std::to_string(n));
      if (u == v)
        throw ParseError(lineno, "self-loop on vertex " + std::to_string(u));
      if (!b.add_edge(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1)))
        throw ParseError(lineno, "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
      ++seen;
    } else {
      throw ParseError(lineno, "unknown line type '" + tag + "'");
    }
  }
  if (!have_header)
    throw ParseError(lineno, "missing 'p edge' header");
  if (seen != m)
    throw ParseError(lineno, "header declares " + std::to_string(m) + " edges, found " +
                                 std::to_string(seen));
  return std::move(b).build();
}

Graph read_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_graph(in);
}

Graph read_graph_file(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw InputError("cannot open graph file '" + path + "'");
  return read_graph(in);
}

void write_graph(std::ostream &out, const Graph &g) {
  out << "p edge " << g.order() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges())
    out << "e " << u + 1 << ' ' << v + 1 << '\n';
}

std::string write_graph(const Graph &g) {
  std::ostringstream out;
  write_graph(out, g);
  return out.str();
}

} // namespace cliquechroma
