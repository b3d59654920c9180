#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

#include "starsat/graph.hpp"
#include "starsat/independence.hpp"
#include "starsat/prob_params.hpp"

namespace starsat {

// A spanning subgraph H of a host G is K_{1,r}-saturated in G when
// max deg(H) <= r-1 and every edge of G outside H has an endpoint of
// H-degree exactly r-1.

enum class Verdict { valid, not_star_free, not_edge_maximal };

std::string_view to_string(Verdict v) noexcept;
std::optional<Verdict> verdict_from_string(std::string_view s) noexcept;

struct SaturationCertificate {
  Vertex n = 0;
  int r = 2;
  std::uint64_t host_hash = 0;
  EdgeList edges;  // sorted
  Verdict verdict = Verdict::valid;
  std::optional<Edge> offending_edge;      // not_edge_maximal: first addable edge
  std::optional<Vertex> offending_vertex;  // not_star_free: vertex of degree >= r

  bool valid() const noexcept { return verdict == Verdict::valid; }
  std::int64_t edge_count() const noexcept { return static_cast<std::int64_t>(edges.size()); }
};

// Throws DomainError if r < 2 or some edge of H is not an edge of G.
SaturationCertificate check_certificate(const EdgeList& h_edges, const Graph& g, int r);

struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Rational make(std::int64_t num, std::int64_t den);
  std::int64_t ceil() const noexcept;
  double to_double() const noexcept { return static_cast<double>(num) / static_cast<double>(den); }
  friend bool operator==(const Rational&, const Rational&) = default;
};

enum class AlphaMethod {
  exact,         // alpha_{r-2} by branch and bound
  greedy_upper,  // certified partition upper bound on alpha_{r-2}; no search
};

struct LowerBound {
  Rational value;            // (r-1)(n - alpha) / 2
  std::int64_t ceiled = 0;
  int alpha = 0;             // the alpha_{r-2} figure used
  bool certified = false;    // false when the exact search ran out of budget
};

// sat(G, K_{1,r}) >= (r-1)(n - alpha_{r-2}(G)) / 2.
LowerBound sat_lower_bound(const Graph& g, int r, AlphaMethod method = AlphaMethod::exact,
                           std::uint64_t budget = kDefaultBudget);

// Adds each edge of `order` (a permutation of E(G)) while both endpoints have
// degree <= r-2. The result is always saturated.
SaturationCertificate greedy_saturated(const Graph& g, int r, std::span<const Edge> order);
SaturationCertificate greedy_saturated(const Graph& g, int r);  // lexicographic order

enum class IndependentSetMethod { exact, greedy };

struct UpperBound {
  std::int64_t upper = 0;
  Vertex ell_used = 0;             // |S| of the final independent set
  bool via_factor = false;         // false: greedy fallback produced H
  bool alpha_exact = false;        // exact independent-set search completed
  bool downgraded = false;         // exact was requested but the budget ran out
  SaturationCertificate certificate;
  KIndependentWitness independent_set;  // the initial S before shrinking
};

// Independent set S plus an (r-1)-factor of G - S. S is shrunk one vertex at
// a time (keeping the highest minimum degree in G - S) until (n-|S|)(r-1) is
// even and the factor exists; if nothing works, greedy_saturated is used.
UpperBound construct_upper(const Graph& g, int r, IndependentSetMethod method = IndependentSetMethod::exact,
                           std::uint64_t budget = kDefaultBudget);

struct ExactResult {
  std::int64_t value = 0;  // best saturated subgraph found
  std::int64_t lower = 0;  // proven lower bound; equals value when exact
  bool exact = false;
  std::uint64_t nodes = 0;
  SaturationCertificate witness;
};

// Minimum saturated subgraph by branch and bound over include/exclude
// decisions on edges ordered by decreasing endpoint-degree sum.
ExactResult sat_exact(const Graph& g, int r, std::uint64_t budget = kDefaultBudget);

struct BoundsReport {
  Rational lower;
  std::int64_t lower_ceiled = 0;
  bool lower_certified = false;
  std::int64_t upper = 0;
  std::optional<std::int64_t> exact;
  Vertex ell_used = 0;
  SaturationCertificate certificate;
  KIndependentWitness independent_set;
};

BoundsReport bounds_report(const Graph& g, int r, bool with_exact, std::uint64_t budget = kDefaultBudget);

// sat(n, K_{1,r}): C(r,2) + C(n-r,2) for r+1 <= n <= 3r/2, else ceil((r-1)n/2 - r^2/8).
std::int64_t classical_sat_star(std::int64_t n, std::int64_t r);

// sat(n, K_r) = (r-2)n - C(r-1, 2).
std::int64_t classical_sat_clique(std::int64_t n, std::int64_t r);

struct ReferenceBands {
  Band main;                 // (r-1)n/2 - (1 +- eps)(r-1) log_b n
  std::optional<Band> matching;  // r = 2 only: (n/2 - log_b(np), n/2 - log_b sqrt(n))
};

ReferenceBands reference_bands(Vertex n, const ProbParams& params, int r, double epsilon);

// Smallest maximal matching by enumerating all matchings; used as an oracle
// for the r = 2 case. Small graphs only.
EdgeList min_maximal_matching_bruteforce(const Graph& g);

}  // namespace starsat
