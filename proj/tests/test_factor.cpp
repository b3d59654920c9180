#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "starsat/error.hpp"
#include "starsat/factor.hpp"
#include "starsat/matching.hpp"

using namespace starsat;

TEST_CASE("max_matching examples") {
  CHECK(max_matching(cycle_graph(5)).size() == 2);
  const Edge paw[] = {{0, 1}, {0, 2}, {1, 2}, {0, 3}};
  CHECK(max_matching(Graph::from_edges(4, paw)).size() == 2);
  const EdgeList pm = max_matching(petersen_graph());
  CHECK(pm.size() == 5);
  CHECK(is_matching(petersen_graph(), pm));
  CHECK(max_matching(Graph(0)).empty());
  CHECK(max_matching(Graph(4)).empty());
}

TEST_CASE("is_matching") {
  const Graph c5 = cycle_graph(5);
  CHECK(is_matching(c5, {{0, 1}, {2, 3}}));
  CHECK_FALSE(is_matching(c5, {{0, 1}, {1, 2}}));
  CHECK_FALSE(is_matching(c5, {{0, 2}}));
}

TEST_CASE("max_matching equals brute force on 500 graphs") {
  for (std::uint64_t i = 0; i < 500; ++i) {
    const Graph g = oracle::random_graph(21, i, 10);
    const EdgeList m = max_matching(g);
    REQUIRE(is_matching(g, m));
    REQUIRE(static_cast<int>(m.size()) == oracle::max_matching(g));
  }
}

TEST_CASE("max_matching on larger sparse graphs") {
  for (std::uint64_t i = 0; i < 30; ++i) {
    const Graph g = sample_gnp(22, 0.12, {22, i});
    const EdgeList m = max_matching(g);
    REQUIRE(is_matching(g, m));
    REQUIRE(static_cast<int>(m.size()) == oracle::max_matching(g));
  }
}

TEST_CASE("d_factor examples") {
  const FactorResult k4 = d_factor(complete_graph(4), 1);
  CHECK(k4.found);
  CHECK(k4.edges.size() == 2);
  const FactorResult c5 = d_factor(cycle_graph(5), 2);
  CHECK(c5.found);
  CHECK(c5.edges == cycle_graph(5).edges());
  CHECK_FALSE(d_factor(star_graph(3), 1).found);
  const Edge k4e[] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}};
  const FactorResult c4 = d_factor(Graph::from_edges(4, k4e), 2);
  CHECK(c4.found);
  CHECK(c4.edges == EdgeList{{0, 2}, {0, 3}, {1, 2}, {1, 3}});
  CHECK(d_factor(Graph(0), 2).found);
  CHECK_FALSE(d_factor(complete_graph(5), 3).found);
  CHECK(d_factor(petersen_graph(), 3).found);
  CHECK_THROWS_AS(d_factor(cycle_graph(5), 0), DomainError);
}

TEST_CASE("d_factor_bruteforce examples") {
  CHECK(d_factor_bruteforce(cycle_graph(5), 2).found);
  CHECK_FALSE(d_factor_bruteforce(path_graph(4), 2).found);
  CHECK_THROWS_AS(d_factor_bruteforce(complete_graph(8), 2), DomainError);
}

TEST_CASE("d_factor agrees with exhaustive search") {
  int found = 0;
  for (std::uint64_t i = 0; i < 400; ++i) {
    const Graph g = oracle::random_graph(23, i, 7);
    for (Vertex d = 1; d <= 3; ++d) {
      const FactorResult f = d_factor(g, d);
      const FactorResult b = d_factor_bruteforce(g, d);
      REQUIRE(f.found == b.found);
      REQUIRE(f.found == oracle::has_d_factor(g, d));
      if (f.found) {
        ++found;
        REQUIRE(is_d_factor(g, f.edges, d));
        REQUIRE(is_d_factor(g, b.edges, d));
      }
    }
  }
  CHECK(found > 100);
}

TEST_CASE("d_factor on circulants and dense random graphs") {
  for (Vertex m = 4; m <= 30; ++m)
    for (Vertex d = 1; d < m && d <= 5; ++d) {
      if (m * d % 2) continue;
      const Graph g = regular_circulant(m, d);
      const FactorResult f = d_factor(g, d);
      REQUIRE(f.found);
      REQUIRE(f.edges == g.edges());
    }
  for (std::uint64_t i = 0; i < 10; ++i) {
    const Graph g = sample_gnp(60, 0.5, {24, i});
    for (Vertex d = 1; d <= 4; ++d) {
      const FactorResult f = d_factor(g, d);
      REQUIRE(f.found);
      REQUIRE(is_d_factor(g, f.edges, d));
    }
  }
}

TEST_CASE("is_d_factor") {
  CHECK(is_d_factor(cycle_graph(4), cycle_graph(4).edges(), 2));
  CHECK_FALSE(is_d_factor(cycle_graph(4), {{0, 1}}, 1));
  CHECK_FALSE(is_d_factor(cycle_graph(4), {{0, 2}, {1, 3}}, 1));
}

TEST_CASE("af_embedding_condition") {
  CHECK_FALSE(af_embedding_condition(16, 2, ProbParams(0.9)));
  CHECK(af_embedding_condition(1000, 1, ProbParams(0.5)));
  CHECK(10 * std::log(500.0) / 500 == doctest::Approx(0.1243).epsilon(1e-3));
  CHECK_FALSE(af_embedding_condition(100, 1, ProbParams(0.5)));
  CHECK(10 * std::log(50.0) / 50 == doctest::Approx(0.7824).epsilon(1e-3));
  CHECK_THROWS_AS(af_embedding_condition(100, 0, ProbParams(0.5)), DomainError);
}
