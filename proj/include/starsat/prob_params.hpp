#pragma once

#include <cmath>

namespace starsat {

// Edge probability with the derived quantities q = 1 - p and b = 1/q.
// Only 0 < p < 1 is representable; sampling accepts the boundary values directly.
class ProbParams {
 public:
  explicit ProbParams(double p);

  double p() const noexcept { return p_; }
  double q() const noexcept { return q_; }
  double b() const noexcept { return 1.0 / q_; }

  // log base b of x, i.e. ln(x) / ln(1/(1-p)).
  double log_b(double x) const noexcept { return std::log(x) / -std::log1p(-p_); }

 private:
  double p_;
  double q_;
};

}  // namespace starsat
