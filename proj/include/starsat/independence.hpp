#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "starsat/graph.hpp"
#include "starsat/prob_params.hpp"

namespace starsat {

inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

// A vertex set whose induced subgraph has maximum degree <= k. Vertices sorted.
struct KIndependentWitness {
  int k = 0;
  std::vector<Vertex> vertices;

  std::size_t size() const noexcept { return vertices.size(); }
};

bool is_k_independent(const Graph& g, std::span<const Vertex> vertices, int k);

// Scans `order` (a permutation of V(G)) and keeps v whenever the set stays k-independent.
KIndependentWitness greedy_k_independent(const Graph& g, int k, std::span<const Vertex> order);

// Same scan with vertices ordered by increasing degree, ties by id.
KIndependentWitness greedy_k_independent(const Graph& g, int k);

struct AlphaResult {
  KIndependentWitness witness;  // best set found
  bool exact = false;           // false when the budget ran out; witness is then a lower bound
  std::uint64_t nodes = 0;      // node expansions used
};

// Maximum k-independent set by branch and bound.
//
// Each node holds the chosen set S and the candidates P that can still be
// added without breaking k-independence. The bound partitions P into groups
// that can each contribute a limited number of vertices:
//   * for u in S, candidates adjacent to u can contribute at most k - deg_S(u);
//   * the rest is covered greedily by cliques of G, and a clique contributes
//     at most k + 1 vertices (k = 0 gives the usual colouring bound).
// Vertices whose groups fit under the incumbent are never branched on.
// `budget` caps node expansions.
AlphaResult alpha_k_exact(const Graph& g, int k, std::uint64_t budget = kDefaultBudget);

// Root value of the partition bound above: a certified upper bound on alpha_k.
int alpha_k_upper_bound(const Graph& g, int k);

struct Band {
  double lo = 0;
  double hi = 0;

  bool contains(double x) const noexcept { return lo <= x && x <= hi; }
};

// Expected window for alpha_k(G(n, p)):
//   hi = 2 log_b n + 2k log_b log_b n - 1   (first-moment threshold)
//   lo = 2 log_b n - 2 log_b log_b n - 2    (desk-scale calibration of the lower edge)
// Requires log_b n > 1 so the iterated logarithm is positive.
Band alpha_k_predicted_band(Vertex n, const ProbParams& params, int k);

}  // namespace starsat
