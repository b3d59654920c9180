#include <cmath>
#include <numeric>

#include "doctest.h"
#include "oracles.hpp"
#include "starsat/certificate_json.hpp"
#include "starsat/edge_list.hpp"
#include "starsat/error.hpp"
#include "starsat/independence.hpp"
#include "starsat/saturation.hpp"

using namespace starsat;

TEST_CASE("check_certificate examples") {
  const Graph k4 = complete_graph(4);
  CHECK(check_certificate({{0, 1}, {2, 3}}, k4, 2).valid());
  const SaturationCertificate empty = check_certificate({}, k4, 2);
  CHECK(empty.verdict == Verdict::not_edge_maximal);
  REQUIRE(empty.offending_edge);
  CHECK(*empty.offending_edge == Edge(0, 1));

  const Graph c5 = cycle_graph(5);
  EdgeList minus = c5.edges();
  minus.erase(minus.begin());
  const SaturationCertificate m = check_certificate(minus, c5, 3);
  CHECK(m.verdict == Verdict::not_edge_maximal);
  CHECK(*m.offending_edge == Edge(0, 1));
  CHECK(check_certificate(c5.edges(), c5, 3).valid());

  const SaturationCertificate star = check_certificate(k4.edges(), k4, 3);
  CHECK(star.verdict == Verdict::not_star_free);
  CHECK(star.offending_vertex == 0);

  CHECK_THROWS_AS(check_certificate({{0, 2}}, c5, 3), DomainError);
  CHECK_THROWS_AS(check_certificate({{0, 1}, {1, 0}}, c5, 3), DomainError);
  CHECK_THROWS_AS(check_certificate({}, c5, 1), DomainError);
  CHECK(check_certificate({}, k4, 2).host_hash == graph_hash(k4));
}

TEST_CASE("H = G is saturated exactly when G is star-free") {
  for (std::uint64_t i = 0; i < 200; ++i) {
    const Graph g = oracle::random_graph(31, i, 10);
    for (int r = 2; r <= 5; ++r)
      REQUIRE(check_certificate(g.edges(), g, r).valid() == (g.max_degree() <= r - 1));
  }
}

TEST_CASE("verdict strings") {
  for (Verdict v : {Verdict::valid, Verdict::not_star_free, Verdict::not_edge_maximal})
    CHECK(verdict_from_string(to_string(v)) == v);
  CHECK(to_string(Verdict::not_edge_maximal) == "not-edge-maximal");
  CHECK_FALSE(verdict_from_string("bogus"));
}

TEST_CASE("sat_lower_bound examples") {
  const LowerBound k4 = sat_lower_bound(complete_graph(4), 2);
  CHECK(k4.value == Rational::make(3, 2));
  CHECK(k4.ceiled == 2);
  CHECK(k4.certified);
  for (int r = 2; r <= 5; ++r) CHECK(sat_lower_bound(Graph(6), r).value == Rational::make(0, 1));
  CHECK(sat_lower_bound(cycle_graph(5), 3).value == Rational::make(2, 1));
  CHECK_THROWS_AS(sat_lower_bound(cycle_graph(5), 1), DomainError);
  CHECK(Rational::make(-3, 2).ceil() == -1);
  CHECK(Rational::make(4, -6) == Rational::make(-2, 3));
}

TEST_CASE("greedy-upper lower bound never exceeds the exact one") {
  for (std::uint64_t i = 0; i < 200; ++i) {
    const Graph g = oracle::random_graph(32, i, 12);
    for (int r = 2; r <= 4; ++r) {
      const LowerBound e = sat_lower_bound(g, r, AlphaMethod::exact);
      const LowerBound u = sat_lower_bound(g, r, AlphaMethod::greedy_upper);
      REQUIRE(u.value.to_double() <= e.value.to_double());
      REQUIRE(e.alpha == oracle::alpha_k(g, r - 2));
    }
  }
}

TEST_CASE("greedy_saturated examples") {
  CHECK(greedy_saturated(complete_graph(4), 2).edges == EdgeList{{0, 1}, {2, 3}});
  CHECK(greedy_saturated(Graph(5), 3).edges.empty());
  CHECK(greedy_saturated(Graph(5), 3).valid());
  const Graph c6 = cycle_graph(6);
  CHECK(greedy_saturated(c6, 3).edges == c6.edges());
  const EdgeList order{{0, 3}, {0, 1}, {1, 2}, {0, 2}, {1, 3}, {2, 3}};
  CHECK(greedy_saturated(complete_graph(4), 2, order).edges == EdgeList{{0, 3}, {1, 2}});
  CHECK_THROWS_AS(greedy_saturated(complete_graph(4), 2, EdgeList{{0, 1}}), DomainError);
}

TEST_CASE("construct_upper examples") {
  const UpperBound k4 = construct_upper(complete_graph(4), 2);
  CHECK(k4.upper == 2);
  CHECK(k4.ell_used == 0);
  CHECK(k4.via_factor);
  CHECK(k4.independent_set.size() == 1);
  const UpperBound c5 = construct_upper(cycle_graph(5), 3);
  CHECK(c5.upper == 5);
  CHECK(c5.ell_used == 0);
  CHECK(c5.independent_set.size() == 2);
  const UpperBound e = construct_upper(Graph(5), 3);
  CHECK(e.upper == 0);
  CHECK_FALSE(e.via_factor);
  CHECK(e.certificate.valid());
}

TEST_CASE("upper bounds always carry valid certificates") {
  for (std::uint64_t i = 0; i < 300; ++i) {
    const Graph g = oracle::random_graph(33, i, 14);
    for (int r = 2; r <= 4; ++r) {
      for (auto method : {IndependentSetMethod::exact, IndependentSetMethod::greedy}) {
        const UpperBound u = construct_upper(g, r, method);
        REQUIRE(u.certificate.valid());
        REQUIRE(check_certificate(u.certificate.edges, g, r).valid());
        REQUIRE(u.upper == u.certificate.edge_count());
        if (u.via_factor) REQUIRE(2 * u.upper == (g.order() - u.ell_used) * (r - 1));
        REQUIRE(is_k_independent(g, u.independent_set.vertices, 0));
      }
      REQUIRE(greedy_saturated(g, r).valid());
    }
  }
}

TEST_CASE("sat_exact examples") {
  CHECK(sat_exact(complete_graph(4), 2).value == 2);
  CHECK(sat_exact(cycle_graph(5), 3).value == 5);
  CHECK(sat_exact(Graph(6), 4).value == 0);
  const ExactResult p = sat_exact(petersen_graph(), 2);
  CHECK(p.exact);
  CHECK(p.value == 3);
  CHECK(p.witness.valid());
}

TEST_CASE("sat_exact equals edge-subset brute force") {
  int checked = 0;
  for (std::uint64_t i = 0; i < 400 && checked < 250; ++i) {
    const Graph g = oracle::random_graph(34, i, 8);
    if (g.size() > 16) continue;
    ++checked;
    for (int r = 2; r <= 4; ++r) {
      const ExactResult e = sat_exact(g, r);
      REQUIRE(e.exact);
      REQUIRE(e.value == oracle::sat_bruteforce(g, r));
      REQUIRE(check_certificate(e.witness.edges, g, r).valid());
      REQUIRE(e.witness.edge_count() == e.value);
    }
  }
  CHECK(checked >= 200);
}

TEST_CASE("sat_exact with r = 2 is the minimum maximal matching") {
  for (std::uint64_t i = 0; i < 300; ++i) {
    const Graph g = oracle::random_graph(35, i, 9);
    REQUIRE(sat_exact(g, 2).value == oracle::min_maximal_matching(g));
    REQUIRE(static_cast<int>(min_maximal_matching_bruteforce(g).size()) == oracle::min_maximal_matching(g));
  }
}

TEST_CASE("sandwich on a random corpus") {
  for (std::uint64_t i = 0; i < 200; ++i) {
    const Graph g = oracle::random_graph(36, i, 10);
    for (int r = 2; r <= 3; ++r) {
      const BoundsReport b = bounds_report(g, r, true);
      REQUIRE(b.exact);
      REQUIRE(b.lower_ceiled <= *b.exact);
      REQUIRE(*b.exact <= b.upper);
      REQUIRE(*b.exact <= greedy_saturated(g, r).edge_count());
    }
  }
}

TEST_CASE("sat_exact budget exhaustion yields an interval") {
  const ExactResult e = sat_exact(complete_graph(10), 4, 5);
  CHECK_FALSE(e.exact);
  CHECK(e.lower <= 13);
  CHECK(e.value >= 13);
  CHECK(e.witness.valid());
}

TEST_CASE("classical formulas") {
  CHECK(classical_sat_star(4, 3) == 3);
  CHECK(classical_sat_star(3, 2) == 1);
  CHECK(classical_sat_star(6, 3) == 5);
  CHECK_THROWS_AS(classical_sat_star(3, 3), DomainError);
  CHECK(classical_sat_clique(3, 3) == 2);
  CHECK(classical_sat_clique(4, 3) == 3);
  for (int n = 2; n < 20; ++n) CHECK(classical_sat_clique(n, 2) == 0);
  CHECK_THROWS_AS(classical_sat_clique(2, 3), DomainError);
  for (std::int64_t r = 2; r <= 6; ++r)
    for (std::int64_t n = r + 1; n <= 30; ++n) {
      const std::int64_t expect =
          2 * n <= 3 * r ? r * (r - 1) / 2 + (n - r) * (n - r - 1) / 2
                         : static_cast<std::int64_t>(std::ceil((r - 1) * n / 2.0 - r * r / 8.0 - 1e-12));
      REQUIRE(classical_sat_star(n, r) == expect);
    }
}

TEST_CASE("sat_exact on complete graphs matches the star formula") {
  for (int r = 2; r <= 3; ++r)
    for (int n = r + 1; n <= 9; ++n) REQUIRE(sat_exact(complete_graph(n), r).value == classical_sat_star(n, r));
}

TEST_CASE("reference_bands") {
  const ReferenceBands z = reference_bands(100, ProbParams(0.5), 2, 0.25);
  REQUIRE(z.matching);
  CHECK(z.matching->lo == doctest::Approx(50 - std::log2(50.0)));
  CHECK(z.matching->lo == doctest::Approx(44.36).epsilon(1e-3));
  CHECK(z.matching->hi == doctest::Approx(46.68).epsilon(1e-3));
  const ReferenceBands m = reference_bands(1024, ProbParams(0.5), 3, 0.1);
  CHECK(m.main.lo == doctest::Approx(1002));
  CHECK(m.main.hi == doctest::Approx(1006));
  CHECK_FALSE(m.matching);
  const ReferenceBands zero = reference_bands(1024, ProbParams(0.5), 3, 0.0);
  CHECK(zero.main.lo == zero.main.hi);
  CHECK(zero.main.lo == doctest::Approx(1004));
  CHECK_THROWS_AS(reference_bands(1024, ProbParams(0.5), 3, 1.0), DomainError);
  CHECK_THROWS_AS(reference_bands(1, ProbParams(0.5), 3, 0.1), DomainError);
}

TEST_CASE("certificate JSON round trip") {
  const Graph g = petersen_graph();
  const SaturationCertificate c = construct_upper(g, 3).certificate;
  const nlohmann::json j = certificate_to_json(c);
  CHECK(j.at("verdict") == "valid");
  CHECK(j.at("host_hash") == hash_hex(graph_hash(g)));
  const SaturationCertificate back = certificate_from_json(j);
  CHECK(back.edges == c.edges);
  CHECK(back.host_hash == c.host_hash);
  CHECK(back.r == 3);
  CHECK(parse_hash_hex(hash_hex(0xdeadbeefULL)) == 0xdeadbeefULL);

  const SaturationCertificate bad = check_certificate({}, complete_graph(4), 2);
  const SaturationCertificate bad_back = certificate_from_json(certificate_to_json(bad));
  CHECK(bad_back.verdict == Verdict::not_edge_maximal);
  CHECK(bad_back.offending_edge == bad.offending_edge);

  CHECK_THROWS_AS(certificate_from_json(nlohmann::json::parse(R"({"n": 3})")), ParseError);
  CHECK_THROWS_AS(certificate_from_json(nlohmann::json::parse(R"([1, 2])")), ParseError);
}
