#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>

#include "kdeg/approx.hpp"
#include "kdeg/degeneracy.hpp"
#include "kdeg/generators.hpp"
#include "kdeg/oracle.hpp"

using namespace kdeg;

namespace {

bool edges_covered(const Graph& g, const std::vector<int>& cover) {
  for (auto [u, v] : g.edges())
    if (!std::binary_search(cover.begin(), cover.end(), u) &&
        !std::binary_search(cover.begin(), cover.end(), v))
      return false;
  return true;
}

bool is_clique(const Graph& g, const std::vector<int>& c) {
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = i + 1; j < c.size(); ++j)
      if (!g.has_edge(c[i], c[j])) return false;
  return true;
}

}  // namespace

TEST_CASE("vertex cover fixtures") {
  const auto star =
      Graph::from_edges(6, {{5, 0}, {5, 1}, {5, 2}, {5, 3}, {5, 4}});
  const auto r = vertex_cover_approx(star);
  CHECK(r.cover == std::vector<int>{5});
  CHECK(r.lp_half_units == 2);  // LP optimum 1: integral on bipartite graphs
  CHECK(r.ratio_certificate() == doctest::Approx(1.0));

  const auto c4 = vertex_cover_approx(cycle_graph(4));
  CHECK(c4.cover.size() == 2);
  CHECK(edges_covered(cycle_graph(4), c4.cover));

  const auto k4 = vertex_cover_approx(complete_graph(4));
  CHECK(k4.cover.size() == 3);
  CHECK(edges_covered(complete_graph(4), k4.cover));
  CHECK(k4.lp_half_units == 4);  // all-half solution, LP value 2

  const auto none = vertex_cover_approx(Graph::from_edges(3, {}));
  CHECK(none.cover.empty());
  CHECK(none.lp_half_units == 0);

  // odd cycle: all-half LP, cover of 3 = optimum
  const auto c5 = vertex_cover_approx(cycle_graph(5));
  CHECK(c5.cover.size() == 3);
  CHECK(c5.lp_half_units == 5);
}

TEST_CASE("vertex cover ratio against the oracle on random graphs") {
  std::mt19937_64 rng(103);
  for (int t = 0; t < 120; ++t) {
    const int n = 2 + static_cast<int>(rng() % 15);
    const auto g = gnp_random(n, 0.1 + 0.09 * (t % 9), rng());
    const auto r = vertex_cover_approx(g);
    CHECK(edges_covered(g, r.cover));

    const int opt = oracle::min_vertex_cover_size(g);
    const int k = degeneracy_ordering(g).k;
    // LP bound sandwich, in half units to stay exact
    CHECK(r.lp_half_units <= 2 * static_cast<std::uint64_t>(opt));
    CHECK(static_cast<std::uint64_t>(opt) <=
          std::max<std::uint64_t>(r.cover.size(), 1) *
              1);  // opt <= cover size unless both zero
    CHECK(opt <= static_cast<int>(r.cover.size()));
    if (opt > 0) {
      REQUIRE(k >= 1);
      // cover <= (2 - 1/k) * opt, exactly in integers
      CHECK(static_cast<std::uint64_t>(r.cover.size()) * k <=
            static_cast<std::uint64_t>(2 * k - 1) * opt);
    } else {
      CHECK(r.cover.empty());
    }
  }
}

TEST_CASE("max clique exact on fixtures") {
  CHECK(max_clique_exact(complete_graph(5)).size() == 5);
  CHECK(max_clique_exact(petersen_graph()).size() == 2);

  // C5 plus a chord has a triangle
  auto edges = cycle_graph(5).edges();
  edges.emplace_back(0, 2);
  const auto chord = Graph::from_edges(5, edges);
  CHECK(max_clique_exact(chord).size() == 3);

  CHECK(max_clique_exact(Graph()).empty());
  CHECK(max_clique_exact(Graph::from_edges(3, {})).size() == 1);
}

TEST_CASE("max clique exact equals oracle on random graphs") {
  std::mt19937_64 rng(107);
  for (int t = 0; t < 60; ++t) {
    const int n = 1 + static_cast<int>(rng() % 16);
    const auto g = gnp_random(n, 0.2 + 0.08 * (t % 8), rng());
    const auto c = max_clique_exact(g);
    CHECK(is_clique(g, c));
    CHECK(static_cast<int>(c.size()) == oracle::max_clique_size(g));
    CHECK(max_clique_exact(g, 4).size() == c.size());
  }
}

TEST_CASE("pluggable solver with ratio 1 matches the exact path") {
  std::mt19937_64 rng(109);
  const auto solver = exact_clique_solver();
  CHECK(solver.ratio == doctest::Approx(1.0));
  for (int t = 0; t < 40; ++t) {
    const int n = 1 + static_cast<int>(rng() % 14);
    const auto g = gnp_random(n, 0.4, rng());
    const auto approx = max_clique_approx(g, solver);
    CHECK(is_clique(g, approx));
    CHECK(approx.size() == max_clique_exact(g).size());
    CHECK(max_clique_approx(g, solver, 3).size() == approx.size());
  }
}

TEST_CASE("greedy solver output is always a clique") {
  const auto greedy = greedy_clique_solver();
  const std::vector<int> parts{3, 3};
  const auto k33 = complete_multipartite(parts);
  const auto got = max_clique_approx(k33, greedy);
  CHECK(is_clique(k33, got));
  CHECK(got.size() >= 2);
  CHECK(oracle::max_clique_size(k33) == 2);

  const auto single = max_clique_approx(Graph::from_edges(3, {}), greedy);
  CHECK(single.size() == 1);

  std::mt19937_64 rng(113);
  for (int t = 0; t < 30; ++t) {
    const auto g = gnp_random(12, 0.5, rng());
    CHECK(is_clique(g, max_clique_approx(g, greedy)));
  }
}

TEST_CASE("a lying solver is rejected") {
  CliqueSolver bad{"bad", 1.0, [](const LocalGraph& g) {
                     std::vector<int> all(g.num_vertices());
                     for (int v = 0; v < g.num_vertices(); ++v) all[v] = v;
                     return all;  // usually not a clique
                   }};
  // C4: the first G_i^+ contains both neighbors of v_i, which are not
  // adjacent to each other.
  CHECK_THROWS_AS(max_clique_approx(cycle_graph(4), bad), std::logic_error);
}
