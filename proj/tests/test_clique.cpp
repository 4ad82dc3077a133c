#include <doctest.h>

#include <algorithm>

#include "cliquechroma/clique.hpp"
#include "cliquechroma/errors.hpp"
#include "oracles.hpp"

using namespace cliquechroma;

namespace {

// Triangle {0,1,2} with vertex 3 attached to 0 and 1.
Graph triangle_with_pendant() {
  GraphBuilder b(4);
  b.add_edge(0, 1);
  b.add_edge(1, 2);
  b.add_edge(0, 2);
  b.add_edge(3, 0);
  b.add_edge(3, 1);
  return std::move(b).build();
}

VertexSet from_mask(std::size_t n, std::uint32_t mask) {
  VertexSet s(n);
  for (Vertex v = 0; v < n; ++v)
    if ((mask >> v) & 1U)
      s.insert(v);
  return s;
}

} // namespace

TEST_CASE("is_clique") {
  CHECK(is_clique(complete_graph(4), VertexSet(4, {0, 1, 2})));
  CHECK_FALSE(is_clique(cycle_graph(5), VertexSet(5, {0, 1, 2})));
  CHECK(is_clique(cycle_graph(5), VertexSet(5, {3})));
  CHECK(is_clique(cycle_graph(5), VertexSet(5)));
}

TEST_CASE("maximal clique enumeration on small named graphs") {
  const auto k4 = enumerate_maximal_cliques(complete_graph(4));
  REQUIRE(k4.size() == 1);
  CHECK(k4[0] == VertexSet::full(4));

  const auto c5 = enumerate_maximal_cliques(cycle_graph(5));
  CHECK(c5.size() == 5);
  for (const VertexSet &c : c5)
    CHECK(c.size() == 2);

  CHECK(enumerate_maximal_cliques(empty_graph(6)).empty());
  CHECK(enumerate_maximal_cliques(empty_graph(6), 1).size() == 6);
  CHECK(enumerate_maximal_cliques(petersen_graph(), 2, 4).size() == 4);
}

TEST_CASE("enumeration matches the subset-scan oracle") {
  SplitMix64 rng(21);
  for (int round = 0; round < 300; ++round) {
    const std::size_t n = 1 + uniform_below(rng, 10);
    const double p = 0.1 + 0.8 * static_cast<double>(uniform_below(rng, 100)) / 100.0;
    const Graph g = gen_random_graph({n, p, rng()});
    for (std::size_t min_size : {1, 2, 3}) {
      std::vector<std::uint32_t> got;
      for_each_maximal_clique(g, min_size, [&](const VertexSet &c) {
        CHECK(is_clique(g, c));
        CHECK(is_maximal_in(g, c));
        got.push_back(oracle::to_mask(c));
        return true;
      });
      std::vector<std::uint32_t> want = oracle::maximal_cliques(g, min_size);
      std::sort(got.begin(), got.end());
      CHECK(std::adjacent_find(got.begin(), got.end()) == got.end());
      CHECK(got == want);
    }
  }
}

TEST_CASE("enumeration order is deterministic and budgets are enforced") {
  const Graph g = gen_random_graph({40, 0.5, 5});
  CHECK(enumerate_maximal_cliques(g) == enumerate_maximal_cliques(g));
  CHECK_THROWS_AS(enumerate_maximal_cliques(g, 2, std::nullopt, CliqueBudget{0, 3}), ResourceError);
  CHECK_THROWS_AS(enumerate_maximal_cliques(g, 2, std::nullopt, CliqueBudget{5, 0}), ResourceError);
}

TEST_CASE("contains_maximal_clique examples") {
  const Graph g = triangle_with_pendant();
  const auto found = contains_maximal_clique(g, VertexSet(4, {0, 1, 2}));
  REQUIRE(found);
  CHECK(*found == VertexSet(4, {0, 1, 2}));
  CHECK_FALSE(contains_maximal_clique(g, VertexSet(4, {0, 1})));

  CHECK(contains_maximal_clique(cycle_graph(5), VertexSet::full(5)));
  CHECK_FALSE(contains_maximal_clique(empty_graph(5), VertexSet::full(5)));
  CHECK(contains_maximal_clique(empty_graph(5), VertexSet(5, {2}), 1));
  CHECK_FALSE(contains_maximal_clique(g, VertexSet(4)));
}

TEST_CASE("contains_maximal_clique matches the oracle on every subset") {
  SplitMix64 rng(99);
  for (int round = 0; round < 120; ++round) {
    const std::size_t n = 1 + uniform_below(rng, 9);
    const Graph g = gen_random_graph({n, 0.5, rng()});
    for (std::uint32_t within = 0; within < (std::uint32_t{1} << n); ++within) {
      for (std::size_t min_size : {1, 2}) {
        const auto got = contains_maximal_clique(g, from_mask(n, within), min_size);
        CHECK(got.has_value() == oracle::has_maximal_clique_inside(g, within, min_size));
        if (got) {
          CHECK(got->is_subset_of(from_mask(n, within)));
          CHECK(got->size() >= min_size);
          CHECK(is_clique(g, *got));
          CHECK(is_maximal_in(g, *got));
        }
      }
    }
  }
}

TEST_CASE("contains_maximal_clique on larger graphs, both layouts") {
  // Sizes on both sides of the compression cutoff, checked against the
  // full enumeration filtered to the subset.
  SplitMix64 rng(4);
  for (int round = 0; round < 60; ++round) {
    const std::size_t n = 20 + uniform_below(rng, 60);
    const Graph g = gen_random_graph({n, 0.5, rng()});
    const std::size_t want_size = 1 + uniform_below(rng, n);
    VertexSet within(n);
    while (within.size() < want_size)
      within.insert(static_cast<Vertex>(uniform_below(rng, n)));
    bool any = false;
    for (const VertexSet &c : enumerate_maximal_cliques(g))
      any = any || c.is_subset_of(within);
    const auto got = contains_maximal_clique(g, within);
    CHECK(got.has_value() == any);
    if (got) {
      CHECK(got->is_subset_of(within));
      CHECK(is_maximal_in(g, *got));
    }
  }
}

TEST_CASE("extend_to_maximal") {
  CHECK(extend_to_maximal(complete_graph(4), VertexSet(4, {0})) == VertexSet::full(4));
  CHECK(extend_to_maximal(cycle_graph(5), VertexSet(5, {0, 1})) == VertexSet(5, {0, 1}));
  const Graph g = triangle_with_pendant();
  CHECK(extend_to_maximal(g, VertexSet(4, {0, 1}), VertexSet(4, {2})) == VertexSet(4, {0, 1, 2}));
  CHECK(extend_to_maximal(g, VertexSet(4, {0, 1}), VertexSet(4, {3})) == VertexSet(4, {0, 1, 3}));
  CHECK_THROWS_AS(extend_to_maximal(cycle_graph(5), VertexSet(5, {0, 2})), InputError);
}

TEST_CASE("find_dominating_clique examples") {
  CHECK_FALSE(find_dominating_clique(complete_graph(4), VertexSet(4, {0, 1, 2}), 2));
  const auto c5 = find_dominating_clique(cycle_graph(5), VertexSet(5, {0, 1}), 2);
  REQUIRE(c5);
  CHECK(*c5 == VertexSet(5, {0, 1}));
  CHECK_FALSE(find_dominating_clique(cycle_graph(5), VertexSet(5, {0, 1}), 3));
  CHECK_THROWS_AS(count_dominating_cliques(cycle_graph(5), 2, 3), InputError);
}

TEST_CASE("count_dominating_cliques examples") {
  CHECK(count_dominating_cliques(complete_graph(7), 6, 2) == 0);
  CHECK(count_dominating_cliques(empty_graph(3), 2, 1) == 2);
  CHECK_THROWS_AS(count_dominating_cliques(complete_graph(40), 30, 10, 1000), ResourceError);
}

TEST_CASE("dominating cliques against the oracle, and count agrees with find") {
  SplitMix64 rng(17);
  for (int round = 0; round < 200; ++round) {
    const std::size_t n = 2 + uniform_below(rng, 9);
    const Graph g = gen_random_graph({n, 0.5, rng()});
    const std::size_t m = 1 + uniform_below(rng, n);
    const std::size_t k = 1 + uniform_below(rng, std::min<std::size_t>(m, 4));
    const std::uint32_t prefix = (std::uint32_t{1} << m) - 1;
    const std::uint64_t count = count_dominating_cliques(g, m, k);
    CHECK(count == oracle::dominating_cliques(g, prefix, k));

    const VertexSet y = VertexSet::prefix(n, m);
    const auto found = find_dominating_clique(g, y, k);
    CHECK((count >= 1) == found.has_value());
    if (found) {
      CHECK(found->size() == k);
      CHECK(found->is_subset_of(y));
      CHECK(is_clique(g, *found));
      // Domination survives extension inside Y.
      const VertexSet grown = extend_to_maximal(g, *found, y);
      CHECK(grown.is_subset_of(y));
      CHECK(is_maximal_in(g, grown));
    }
  }
}

TEST_CASE("find_dominating_clique on arbitrary subsets matches the oracle") {
  SplitMix64 rng(23);
  for (int round = 0; round < 200; ++round) {
    const std::size_t n = 2 + uniform_below(rng, 9);
    const Graph g = gen_random_graph({n, 0.6, rng()});
    const auto within = static_cast<std::uint32_t>(uniform_below(rng, std::uint64_t{1} << n));
    const std::size_t k = 1 + uniform_below(rng, 3);
    const auto found = find_dominating_clique(g, from_mask(n, within), k);
    CHECK(found.has_value() == (oracle::dominating_cliques(g, within, k) > 0));
  }
}
