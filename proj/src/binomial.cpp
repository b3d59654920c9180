#include "starsat/binomial.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "starsat/error.hpp"

namespace starsat {

namespace {

constexpr double kExactLimit = 9007199254740992.0;  // 2^53

void check_range(std::int64_t n, std::int64_t s) {
  if (n < 0 || s < 0 || s > n)
    throw DomainError("need 0 <= s <= n, got n=" + std::to_string(n) + " s=" + std::to_string(s));
}

void check_open_p(double p) {
  if (!(p > 0.0 && p < 1.0)) throw DomainError("success probability must lie in (0, 1)");
}

// Neumaier compensated sum.
class CompensatedSum {
 public:
  void add(double x) noexcept {
    double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x))
      c_ += (sum_ - t) + x;
    else
      c_ += (x - t) + sum_;
    sum_ = t;
  }
  double value() const noexcept { return sum_ + c_; }

 private:
  double sum_ = 0;
  double c_ = 0;
};

}  // namespace

double log_choose(std::int64_t n, std::int64_t k) {
  check_range(n, k);
  return std::lgamma(static_cast<double>(n) + 1) - std::lgamma(static_cast<double>(k) + 1) -
         std::lgamma(static_cast<double>(n - k) + 1);
}

double choose(std::int64_t n, std::int64_t k) {
  check_range(n, k);
  k = std::min(k, n - k);
  // c * (n - i) is divisible by (i + 1) at every step; stay in integers while exact.
  unsigned __int128 c = 1;
  for (std::int64_t i = 0; i < k; ++i) {
    c = c * static_cast<unsigned __int128>(n - i) / static_cast<unsigned __int128>(i + 1);
    if (static_cast<double>(c) > kExactLimit) return std::exp(log_choose(n, k));
  }
  return static_cast<double>(c);
}

double binomial_cdf(std::int64_t n, std::int64_t s, double p) {
  if (n < 0) throw DomainError("trial count must be nonnegative");
  check_open_p(p);
  if (s < 0) return 0.0;
  if (s >= n) return 1.0;
  const double q = 1.0 - p;
  const double log_p = std::log(p);
  const double log_q = std::log1p(-p);
  CompensatedSum sum;
  for (std::int64_t i = 0; i <= s; ++i) {
    const double c = choose(n, i);
    if (c < kExactLimit && n <= 1000)
      sum.add(c * std::pow(p, static_cast<double>(i)) * std::pow(q, static_cast<double>(n - i)));
    else
      sum.add(std::exp(log_choose(n, i) + static_cast<double>(i) * log_p + static_cast<double>(n - i) * log_q));
  }
  return std::clamp(sum.value(), 0.0, 1.0);
}

double binomial_tail_upper(std::int64_t n, std::int64_t s, double p) {
  check_range(n, s);
  check_open_p(p);
  const double c = choose(n, s);
  if (c < kExactLimit) {
    const double tail = std::pow(1.0 - p, static_cast<double>(n - s));
    if (tail > 0.0) return c * tail;
  }
  return std::exp(log_choose(n, s) + static_cast<double>(n - s) * std::log1p(-p));
}

double first_moment_Xs(const FirstMomentInput& in) {
  if (in.k < 0) throw DomainError("k must be nonnegative");
  if (in.s < 1 || in.s > in.n) throw DomainError("need 1 <= s <= n");
  const std::int64_t s = in.s;
  const std::int64_t pairs = s * (s - 1) / 2;
  const std::int64_t max_edges = (static_cast<std::int64_t>(in.k) * s) / 2;
  return choose(in.n, s) * binomial_cdf(pairs, max_edges, in.params.p());
}

}  // namespace starsat
