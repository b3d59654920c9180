#include "starsat/independence.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <cmath>
#include <numeric>
#include <string>

#include "starsat/error.hpp"

namespace starsat {

namespace {

void check_k(int k) {
  if (k < 0) throw DomainError("k must be nonnegative");
}

using Word = std::uint64_t;

inline bool test_bit(const Word* w, std::size_t i) { return (w[i >> 6] >> (i & 63)) & 1U; }
inline void set_bit(Word* w, std::size_t i) { w[i >> 6] |= Word{1} << (i & 63); }
inline void clear_bit(Word* w, std::size_t i) { w[i >> 6] &= ~(Word{1} << (i & 63)); }

template <class F>
void for_each_bit(const Word* w, std::size_t words, F&& f) {
  for (std::size_t i = 0; i < words; ++i)
    for (Word x = w[i]; x; x &= x - 1) f(i * 64 + static_cast<std::size_t>(std::countr_zero(x)));
}

inline bool any_bit(const Word* w, std::size_t words) {
  for (std::size_t i = 0; i < words; ++i)
    if (w[i]) return true;
  return false;
}

// First bit of a & b, or -1.
inline long first_and(const Word* a, const Word* b, std::size_t words) {
  for (std::size_t i = 0; i < words; ++i)
    if (Word x = a[i] & b[i]) return static_cast<long>(i * 64 + static_cast<std::size_t>(std::countr_zero(x)));
  return -1;
}

// Branch and bound over k-independent sets. Candidates are vertices that can
// still join the current set S. The bound partitions the candidates: for
// u in S, its candidate neighbours can contribute at most k - deg_S(u); the
// rest are covered by cliques, where a clique holds at most t members when
// only t of them have residual k - deg_S >= t - 1.
class AlphaKSolver {
 public:
  AlphaKSolver(const Graph& g, int k, std::uint64_t budget)
      : k_(k),
        n_(static_cast<std::size_t>(g.order())),
        w_((n_ + 63) / 64),
        adj_(n_ * w_, 0),
        deg_in_s_(n_, 0),
        rest_(w_),
        group_(w_),
        open_(w_),
        level_(static_cast<std::size_t>(k + 1) * w_),
        label_(n_),
        index_(n_),
        nbrs_(n_),
        budget_(budget) {
    // Internal labels in ascending degree order.
    std::iota(label_.begin(), label_.end(), 0);
    std::stable_sort(label_.begin(), label_.end(), [&](Vertex a, Vertex b) { return g.degree(a) < g.degree(b); });
    for (std::size_t i = 0; i < n_; ++i) index_[static_cast<std::size_t>(label_[i])] = static_cast<Vertex>(i);
    for (Vertex v = 0; v < g.order(); ++v) {
      const auto vi = static_cast<std::size_t>(index_[static_cast<std::size_t>(v)]);
      for (Vertex w : g.neighbors(v)) {
        nbrs_[vi].push_back(index_[static_cast<std::size_t>(w)]);
        set_bit(row(vi), static_cast<std::size_t>(nbrs_[vi].back()));
      }
    }
  }

  AlphaResult solve(std::vector<Vertex> incumbent) {
    best_.clear();
    for (Vertex v : incumbent) best_.push_back(index_[static_cast<std::size_t>(v)]);
    Word* root = frame(0).cand.data();
    for (std::size_t v = 0; v < n_; ++v) set_bit(root, v);
    expand(0);
    for (Vertex& v : best_) v = label_[static_cast<std::size_t>(v)];
    std::sort(best_.begin(), best_.end());
    return {KIndependentWitness{k_, best_}, !aborted_, nodes_};
  }

  int root_bound() {
    Frame& f = frame(0);
    for (std::size_t v = 0; v < n_; ++v) set_bit(f.cand.data(), v);
    partition(f);
    return f.bound.empty() ? 0 : std::min<int>(f.bound.back(), static_cast<int>(n_));
  }

 private:
  struct Frame {
    std::vector<Word> cand;
    std::vector<Vertex> order;
    std::vector<int> bound;
  };

  Word* row(std::size_t v) { return adj_.data() + v * w_; }
  const Word* row(std::size_t v) const { return adj_.data() + v * w_; }

  Frame& frame(std::size_t depth) {
    while (frames_.size() <= depth) {
      frames_.emplace_back();
      frames_.back().cand.assign(w_, 0);
      frames_.back().order.reserve(n_);
      frames_.back().bound.reserve(n_);
    }
    return frames_[depth];
  }

  // Fills f.order/f.bound. bound[i] bounds the number of vertices a solution
  // can take from order[0..i].
  void partition(Frame& f) {
    f.order.clear();
    f.bound.clear();
    std::copy(f.cand.begin(), f.cand.end(), rest_.begin());
    int total = 0;

    if (k_ > 0) {
      group_used_.assign(chosen_.size(), 0);
      while (true) {
        long best_gain = 0;
        std::size_t pick = 0;
        for (std::size_t i = 0; i < chosen_.size(); ++i) {
          if (group_used_[i]) continue;
          const auto u = static_cast<std::size_t>(chosen_[i]);
          long count = 0;
          const Word* a = row(u);
          for (std::size_t j = 0; j < w_; ++j) count += std::popcount(rest_[j] & a[j]);
          const long gain = count - (k_ - deg_in_s_[u]);
          if (gain > best_gain) best_gain = gain, pick = i;
        }
        if (best_gain <= 0) break;
        group_used_[pick] = 1;
        const auto u = static_cast<std::size_t>(chosen_[pick]);
        const int cap = k_ - deg_in_s_[u];
        const Word* a = row(u);
        for (std::size_t j = 0; j < w_; ++j) {
          group_[j] = rest_[j] & a[j];
          rest_[j] &= ~a[j];
        }
        int j = 0;
        for_each_bit(group_.data(), w_, [&](std::size_t v) {
          f.order.push_back(static_cast<Vertex>(v));
          f.bound.push_back(total + std::min(++j, cap));
        });
        total += cap;
      }
    }

    // Residual levels of the remaining candidates.
    std::fill(level_.begin(), level_.end(), 0);
    for_each_bit(rest_.data(), w_, [&](std::size_t v) {
      set_bit(level_.data() + static_cast<std::size_t>(k_ - deg_in_s_[v]) * w_, v);
    });
    // Vertices adjacent to S first (levels below k), then the free ones.
    total = clique_cover(f, 0, static_cast<std::size_t>(k_), total);
    if (!chosen_.empty() && !f.order.empty()) total = cap_by_budget(f);
    clique_cover(f, static_cast<std::size_t>(k_), static_cast<std::size_t>(k_) + 1, total);
  }

  // Covers the candidates with residual level in [lo, hi) by cliques.
  int clique_cover(Frame& f, std::size_t lo, std::size_t hi, int total) {
    const auto levels = static_cast<std::size_t>(k_ + 1);
    while (true) {
      long seed = -1;
      for (std::size_t lv = lo; lv < hi && seed < 0; ++lv) seed = first_and(rest_.data(), level_.data() + lv * w_, w_);
      if (seed < 0) return total;
      hist_.assign(levels, 0);
      int cap = 0;
      std::copy(rest_.begin(), rest_.end(), open_.begin());
      while (true) {
        long v = -1;
        for (std::size_t lv = lo; lv < hi && v < 0; ++lv) v = first_and(open_.data(), level_.data() + lv * w_, w_);
        if (v < 0) break;
        const auto vi = static_cast<std::size_t>(v);
        const Word* a = row(vi);
        for (std::size_t j = 0; j < w_; ++j) open_[j] &= a[j];
        clear_bit(rest_.data(), vi);
        const auto lv = static_cast<std::size_t>(k_ - deg_in_s_[vi]);
        clear_bit(level_.data() + lv * w_, vi);
        ++hist_[lv];
        // Largest t with at least t members of residual >= t - 1.
        int at_least = 0;
        cap = 0;
        for (int t = static_cast<int>(levels); t >= 1; --t) {
          at_least += hist_[static_cast<std::size_t>(t - 1)];
          if (at_least >= t) {
            cap = t;
            break;
          }
        }
        f.order.push_back(static_cast<Vertex>(v));
        f.bound.push_back(total + cap);
      }
      total += cap;
    }
  }

  // Every candidate w adjacent to S uses deg_S(w) units of the budget
  // sum_u min(k - deg_S(u), |N(u) & C|); tightens the prefix bounds of f,
  // which so far hold only S-adjacent vertices, and returns the last one.
  int cap_by_budget(Frame& f) {
    long budget = 0;
    const Word* cand = f.cand.data();
    for (Vertex u : chosen_) {
      const auto ui = static_cast<std::size_t>(u);
      const long b = k_ - deg_in_s_[ui];
      if (b <= 0) continue;
      long count = 0;
      const Word* a = row(ui);
      for (std::size_t j = 0; j < w_; ++j) count += std::popcount(cand[j] & a[j]);
      budget += std::min(b, count);
    }
    hist_.assign(static_cast<std::size_t>(k_) + 1, 0);
    for (std::size_t i = 0; i < f.order.size(); ++i) {
      ++hist_[static_cast<std::size_t>(deg_in_s_[static_cast<std::size_t>(f.order[i])])];
      long left = budget, picks = 0;
      for (int d = 1; d <= k_ && left >= d; ++d) {
        const long take = std::min<long>(hist_[static_cast<std::size_t>(d)], left / d);
        picks += take;
        left -= take * d;
      }
      f.bound[i] = std::min(f.bound[i], static_cast<int>(picks));
    }
    return f.bound.back();
  }

  void expand(std::size_t depth) {
    if (aborted_) return;
    if (++nodes_ > budget_) {
      aborted_ = true;
      return;
    }
    if (chosen_.size() > best_.size()) best_ = chosen_;
    Frame& cur = frame(depth);
    Word* next = frame(depth + 1).cand.data();
    if (!any_bit(cur.cand.data(), w_)) return;
    partition(cur);

    for (std::size_t pos = cur.order.size(); pos-- > 0;) {
      if (chosen_.size() + static_cast<std::size_t>(cur.bound[pos]) <= best_.size()) return;
      const Vertex v = cur.order[pos];
      const auto vi = static_cast<std::size_t>(v);
      clear_bit(cur.cand.data(), vi);

      std::copy(cur.cand.begin(), cur.cand.end(), next);
      if (deg_in_s_[vi] == k_) {
        const Word* a = row(vi);
        for (std::size_t j = 0; j < w_; ++j) next[j] &= ~a[j];
      }
      for (Vertex u : chosen_) {
        const auto ui = static_cast<std::size_t>(u);
        if (deg_in_s_[ui] + 1 == k_ && test_bit(row(vi), ui)) {
          const Word* a = row(ui);
          for (std::size_t j = 0; j < w_; ++j) next[j] &= ~a[j];
        }
      }
      for (Vertex w : nbrs_[vi])
        if (deg_in_s_[static_cast<std::size_t>(w)] == k_) clear_bit(next, static_cast<std::size_t>(w));

      chosen_.push_back(v);
      for (Vertex w : nbrs_[vi]) ++deg_in_s_[static_cast<std::size_t>(w)];
      expand(depth + 1);
      for (Vertex w : nbrs_[vi]) --deg_in_s_[static_cast<std::size_t>(w)];
      chosen_.pop_back();
      if (aborted_) return;
    }
  }

  int k_;
  std::size_t n_;
  std::size_t w_;
  std::vector<Word> adj_;
  std::vector<int> deg_in_s_;  // neighbours in chosen_, for every vertex
  std::vector<Vertex> chosen_;
  std::vector<Vertex> best_;
  std::deque<Frame> frames_;
  std::vector<Word> rest_, group_, open_, level_;
  std::vector<char> group_used_;
  std::vector<int> hist_;
  std::vector<Vertex> label_;  // internal -> original
  std::vector<Vertex> index_;  // original -> internal
  std::vector<std::vector<Vertex>> nbrs_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
};

}  // namespace

bool is_k_independent(const Graph& g, std::span<const Vertex> vertices, int k) {
  check_k(k);
  std::vector<char> in(static_cast<std::size_t>(g.order()), 0);
  for (Vertex v : vertices) {
    if (v < 0 || v >= g.order()) throw DomainError("vertex " + std::to_string(v) + " out of range");
    in[static_cast<std::size_t>(v)] = 1;
  }
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!in[static_cast<std::size_t>(v)]) continue;
    int inside = 0;
    for (Vertex w : g.neighbors(v)) inside += in[static_cast<std::size_t>(w)];
    if (inside > k) return false;
  }
  return true;
}

KIndependentWitness greedy_k_independent(const Graph& g, int k, std::span<const Vertex> order) {
  check_k(k);
  const auto n = static_cast<std::size_t>(g.order());
  if (order.size() != n) throw DomainError("order must be a permutation of the vertex set");
  std::vector<char> seen(n, 0), in(n, 0);
  std::vector<int> deg_in(n, 0);
  for (Vertex v : order) {
    if (v < 0 || v >= g.order() || seen[static_cast<std::size_t>(v)])
      throw DomainError("order must be a permutation of the vertex set");
    seen[static_cast<std::size_t>(v)] = 1;
  }
  KIndependentWitness out{k, {}};
  for (Vertex v : order) {
    if (deg_in[static_cast<std::size_t>(v)] > k) continue;
    bool ok = true;
    for (Vertex w : g.neighbors(v))
      if (in[static_cast<std::size_t>(w)] && deg_in[static_cast<std::size_t>(w)] >= k) {
        ok = false;
        break;
      }
    if (!ok) continue;
    in[static_cast<std::size_t>(v)] = 1;
    out.vertices.push_back(v);
    for (Vertex w : g.neighbors(v)) ++deg_in[static_cast<std::size_t>(w)];
  }
  std::sort(out.vertices.begin(), out.vertices.end());
  return out;
}

KIndependentWitness greedy_k_independent(const Graph& g, int k) {
  std::vector<Vertex> order(static_cast<std::size_t>(g.order()));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return g.degree(a) < g.degree(b); });
  return greedy_k_independent(g, k, order);
}

AlphaResult alpha_k_exact(const Graph& g, int k, std::uint64_t budget) {
  check_k(k);
  KIndependentWitness seed = greedy_k_independent(g, k);
  if (k >= g.max_degree()) {
    std::vector<Vertex> all(static_cast<std::size_t>(g.order()));
    std::iota(all.begin(), all.end(), 0);
    return {KIndependentWitness{k, std::move(all)}, true, 0};
  }
  return AlphaKSolver(g, k, budget).solve(std::move(seed.vertices));
}

int alpha_k_upper_bound(const Graph& g, int k) {
  check_k(k);
  return AlphaKSolver(g, k, 0).root_bound();
}

Band alpha_k_predicted_band(Vertex n, const ProbParams& params, int k) {
  check_k(k);
  const double log_n = params.log_b(static_cast<double>(n));
  if (n < 3 || !(log_n > 1.0))
    throw DomainError("n=" + std::to_string(n) + " too small: log_b log_b n must be positive");
  const double loglog = params.log_b(log_n);
  return {2.0 * log_n - 2.0 * loglog - 2.0, 2.0 * log_n + 2.0 * k * loglog - 1.0};
}

}  // namespace starsat
