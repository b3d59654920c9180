#pragma once

#include <cstdint>

#include "starsat/graph.hpp"
#include "starsat/prob_params.hpp"

namespace starsat {

double log_choose(std::int64_t n, std::int64_t k);

// C(n, k) as a double; exact whenever the value fits in 53 bits.
double choose(std::int64_t n, std::int64_t k);

// P(Bin(n, p) <= s), summed term by term with compensation. Clamped to [0, 1].
double binomial_cdf(std::int64_t n, std::int64_t s, double p);

// Union bound P(Bin(n, p) <= s) <= C(n, s) (1 - p)^(n - s). Evaluated in log
// space once C(n, s) leaves the exact double range.
double binomial_tail_upper(std::int64_t n, std::int64_t s, double p);

struct FirstMomentInput {
  Vertex n = 0;
  ProbParams params{0.5};
  int k = 0;
  Vertex s = 1;
};

// Expected number of s-subsets of G(n, p) spanning at most floor(k s / 2) edges:
// C(n, s) * P(Bin(C(s, 2), p) <= floor(k s / 2)).
double first_moment_Xs(const FirstMomentInput& in);

}  // namespace starsat
