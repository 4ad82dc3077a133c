#include <doctest.h>

#include <set>

#include "cliquechroma/coloring.hpp"
#include "cliquechroma/errors.hpp"
#include "oracles.hpp"

using namespace cliquechroma;

namespace {

bool monochromatic(const Coloring &c, const VertexSet &s) {
  std::set<Color> seen;
  s.for_each([&](Vertex v) { seen.insert(c[v]); });
  return seen.size() == 1;
}

Coloring random_coloring(SplitMix64 &rng, std::size_t n, std::size_t max_palette) {
  std::vector<Color> raw(n);
  for (Color &col : raw)
    col = static_cast<Color>(uniform_below(rng, max_palette));
  return Coloring::compacted(raw);
}

} // namespace

TEST_CASE("coloring value type") {
  const Coloring c({0, 2, 1, 2});
  CHECK(c.palette() == 3);
  CHECK(c.color_class(2) == VertexSet(4, {1, 3}));
  CHECK_THROWS_AS(Coloring({0, 2, 2}), InputError);
  CHECK(Coloring::compacted({7, 3, 7, 9}) == Coloring({1, 0, 1, 2}));
  CHECK(Coloring(std::vector<Color>{}).palette() == 0);
}

TEST_CASE("coloring text format") {
  const Coloring c({0, 1, 0});
  CHECK(write_coloring(c) == "colors 3 2\n1 0\n2 1\n3 0\n");
  CHECK(read_coloring(write_coloring(c)) == c);
  CHECK(read_coloring("colors 2 1\n2 0\n1 0\n") == Coloring({0, 0}));
  CHECK_THROWS_AS(read_coloring("colors 2 1\n1 0\n"), ParseError);
  CHECK_THROWS_AS(read_coloring("colors 2 1\n1 0\n1 0\n"), ParseError);
  CHECK_THROWS_AS(read_coloring("colors 2 1\n1 0\n3 0\n"), ParseError);
  CHECK_THROWS_AS(read_coloring("colors 2 1\n1 0\n2 1\n"), ParseError);
  CHECK_THROWS_AS(read_coloring("colors 2 2\n1 0\n2 0\n"), ParseError);
  CHECK_THROWS_AS(read_coloring("1 0\n"), ParseError);
}

TEST_CASE("verify examples") {
  const Graph k3 = complete_graph(3);
  const Verdict all_zero = verify_clique_coloring(k3, Coloring({0, 0, 0}));
  REQUIRE(std::holds_alternative<Violation>(all_zero));
  CHECK(std::get<Violation>(all_zero).clique == VertexSet::full(3));
  CHECK(is_valid(verify_clique_coloring(k3, Coloring({0, 0, 1}))));

  const Verdict c5 = verify_clique_coloring(cycle_graph(5), Coloring({0, 1, 0, 1, 0}));
  REQUIRE(std::holds_alternative<Violation>(c5));
  CHECK(std::get<Violation>(c5).clique == VertexSet(5, {0, 4}));

  CHECK_THROWS_AS(verify_clique_coloring(k3, Coloring({0, 1})), InputError);
  CHECK(is_valid(verify_clique_coloring(empty_graph(4), Coloring({0, 0, 0, 0}))));
  CHECK_FALSE(is_valid(verify_clique_coloring(empty_graph(4), Coloring({0, 0, 0, 0}), 1)));
}

TEST_CASE("verify agrees with checking every maximal clique") {
  SplitMix64 rng(31);
  for (int round = 0; round < 400; ++round) {
    const std::size_t n = 1 + uniform_below(rng, 10);
    const Graph g = gen_random_graph({n, 0.5, rng()});
    const Coloring c = random_coloring(rng, n, 1 + uniform_below(rng, 3));
    bool bad = false;
    for (std::uint32_t clique : oracle::maximal_cliques(g, 2)) {
      std::set<Color> seen;
      for (Vertex v = 0; v < n; ++v)
        if ((clique >> v) & 1U)
          seen.insert(c[v]);
      bad = bad || seen.size() == 1;
    }
    const Verdict verdict = verify_clique_coloring(g, c);
    CHECK(is_valid(verdict) == !bad);
    if (auto *violation = std::get_if<Violation>(&verdict)) {
      CHECK(is_clique(g, violation->clique));
      CHECK(is_maximal_in(g, violation->clique));
      CHECK(monochromatic(c, violation->clique));
    }
  }
}

TEST_CASE("greedy examples") {
  const GreedyResult edgeless = greedy_clique_coloring(empty_graph(5));
  CHECK(edgeless.coloring.palette() == 1);
  CHECK(edgeless.stats.pivot_steps == 0);
  CHECK(edgeless.stats.remainder_size == 5);

  const GreedyResult k4 = greedy_clique_coloring(complete_graph(4));
  CHECK(k4.coloring == Coloring({1, 0, 0, 0}));
  CHECK(k4.stats.pivot_steps == 1);
  CHECK(k4.stats.remainder_size == 1);

  const GreedyResult p3 = greedy_clique_coloring(path_graph(3));
  CHECK(p3.coloring == Coloring({1, 0, 1}));
  CHECK(p3.stats.merged_tail);

  const GreedyResult reversed = greedy_clique_coloring(path_graph(3), std::vector<Vertex>{2, 1, 0});
  CHECK(reversed.coloring.palette() == 2);
  CHECK(is_valid(verify_clique_coloring(path_graph(3), reversed.coloring)));

  CHECK_THROWS_AS(greedy_clique_coloring(path_graph(3), std::vector<Vertex>{0, 0, 1}), InputError);
  CHECK_THROWS_AS(greedy_clique_coloring(path_graph(3), std::vector<Vertex>{0, 1}), InputError);
}

TEST_CASE("greedy output is always a clique coloring") {
  SplitMix64 rng(41);
  for (int round = 0; round < 150; ++round) {
    const std::size_t n = 1 + uniform_below(rng, 90);
    const double p = 0.1 + 0.1 * static_cast<double>(uniform_below(rng, 9));
    const Graph g = gen_random_graph({n, p, rng()});
    const GreedyResult r = greedy_clique_coloring(g);
    CHECK(is_valid(verify_clique_coloring(g, r.coloring)));
    CHECK(r.coloring.palette() <= r.stats.pivot_steps + 1);
  }
}

TEST_CASE("exact and brute-force examples") {
  for (std::size_t n = 2; n <= 8; ++n) {
    CHECK(exact_chi_c(complete_graph(n)).chi_c == 2);
    CHECK(brute_force_chi_c(complete_graph(n)) == 2);
  }
  CHECK(exact_chi_c(cycle_graph(5)).chi_c == 3);
  CHECK(exact_chi_c(cycle_graph(7)).chi_c == 3);
  CHECK(exact_chi_c(petersen_graph()).chi_c == 3);
  CHECK(brute_force_chromatic_number(petersen_graph()) == 3);
  CHECK(exact_chi_c(empty_graph(6)).chi_c == 1);
  CHECK(brute_force_chi_c(path_graph(3)) == 2);
  CHECK(brute_force_chi_c(empty_graph(1)) == 1);
  CHECK(brute_force_chi_c(GraphBuilder(0).build()) == 0);
  CHECK_THROWS_AS(brute_force_chi_c(empty_graph(9)), ResourceError);

  ExactOptions tight;
  tight.max_colors = 2;
  CHECK_THROWS_AS(exact_chi_c(cycle_graph(5), tight), ResourceError);
}

TEST_CASE("optimality sandwich and chi_c <= chi") {
  SplitMix64 rng(53);
  for (int round = 0; round < 250; ++round) {
    const std::size_t n = 1 + uniform_below(rng, 8);
    const Graph g = gen_random_graph({n, 0.2 + 0.6 * static_cast<double>(uniform_below(rng, 4)) / 3.0, rng()});
    const ExactResult exact = exact_chi_c(g);
    CHECK(exact.witness.palette() == exact.chi_c);
    CHECK(is_valid(verify_clique_coloring(g, exact.witness)));
    CHECK(brute_force_chi_c(g) == exact.chi_c);
    CHECK(exact.chi_c <= greedy_clique_coloring(g).coloring.palette());
    CHECK(exact.chi_c <= brute_force_chromatic_number(g));
  }
}

TEST_CASE("triangle-free graphs have chi_c equal to chi") {
  for (std::size_t n : {4, 5, 6, 7, 8})
    CHECK(exact_chi_c(cycle_graph(n)).chi_c == brute_force_chromatic_number(cycle_graph(n)));
}

TEST_CASE("audit examples") {
  const Graph k4 = complete_graph(4);
  const AuditTrace mono = audit_coloring(k4, Coloring({0, 0, 0, 0}));
  REQUIRE(mono.violated());
  CHECK(std::get<Violation>(mono.outcome).clique == VertexSet::full(4));
  CHECK(mono.steps.size() == 1);

  const AuditTrace split = audit_coloring(k4, Coloring({0, 0, 1, 1}));
  REQUIRE_FALSE(split.violated());
  REQUIRE(split.steps.size() == 1);
  CHECK(split.steps[0].color == 0);
  CHECK(split.steps[0].class_size_in_x == 2);
  CHECK(split.steps[0].vertex == Vertex{2});
  CHECK(split.steps[0].non_neighbors == 0);
  CHECK(std::get<AuditExhausted>(split.outcome).remaining.empty());
}

TEST_CASE("audit soundness on random colorings") {
  SplitMix64 rng(61);
  for (int round = 0; round < 300; ++round) {
    const std::size_t n = 2 + uniform_below(rng, 40);
    const Graph g = gen_random_graph({n, 0.5, rng()});
    const Coloring c = round % 3 == 0 ? greedy_clique_coloring(g).coloring
                                      : random_coloring(rng, n, 1 + uniform_below(rng, 5));
    const AuditTrace trace = audit_coloring(g, c);
    const bool valid = is_valid(verify_clique_coloring(g, c));
    if (valid)
      CHECK_FALSE(trace.violated());
    if (const auto *v = std::get_if<Violation>(&trace.outcome)) {
      CHECK(is_clique(g, v->clique));
      CHECK(is_maximal_in(g, v->clique));
      CHECK(monochromatic(c, v->clique));
    }
    std::set<Color> classes;
    std::set<Vertex> vertices;
    for (const AuditStep &s : trace.steps) {
      CHECK(classes.insert(s.color).second);
      if (s.vertex)
        CHECK(vertices.insert(*s.vertex).second);
    }
  }
}
