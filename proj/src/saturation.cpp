#include "starsat/saturation.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numeric>
#include <set>
#include <string>

#include "starsat/edge_list.hpp"
#include "starsat/error.hpp"
#include "starsat/factor.hpp"

namespace starsat {

namespace {

void check_r(int r) {
  if (r < 2) throw DomainError("star order r must be at least 2, got " + std::to_string(r));
}

}  // namespace

std::string_view to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::valid:
      return "valid";
    case Verdict::not_star_free:
      return "not-star-free";
    case Verdict::not_edge_maximal:
      return "not-edge-maximal";
  }
  return "valid";
}

std::optional<Verdict> verdict_from_string(std::string_view s) noexcept {
  for (Verdict v : {Verdict::valid, Verdict::not_star_free, Verdict::not_edge_maximal})
    if (to_string(v) == s) return v;
  return std::nullopt;
}

SaturationCertificate check_certificate(const EdgeList& h_edges, const Graph& g, int r) {
  check_r(r);
  SaturationCertificate cert;
  cert.n = g.order();
  cert.r = r;
  cert.host_hash = graph_hash(g);
  cert.edges = h_edges;
  std::sort(cert.edges.begin(), cert.edges.end());

  std::vector<Vertex> deg(static_cast<std::size_t>(g.order()), 0);
  for (std::size_t i = 0; i < cert.edges.size(); ++i) {
    const Edge& e = cert.edges[i];
    if (e.u < 0 || e.v >= g.order() || e.u == e.v || !g.has_edge(e.u, e.v))
      throw DomainError("edge " + std::to_string(e.u) + " " + std::to_string(e.v) + " is not an edge of the host");
    if (i > 0 && cert.edges[i - 1] == e)
      throw DomainError("duplicate edge " + std::to_string(e.u) + " " + std::to_string(e.v));
    ++deg[static_cast<std::size_t>(e.u)];
    ++deg[static_cast<std::size_t>(e.v)];
  }

  for (Vertex v = 0; v < g.order(); ++v)
    if (deg[static_cast<std::size_t>(v)] > r - 1) {
      cert.verdict = Verdict::not_star_free;
      cert.offending_vertex = v;
      return cert;
    }
  for (const Edge& e : g.edges()) {
    if (std::binary_search(cert.edges.begin(), cert.edges.end(), e)) continue;
    if (deg[static_cast<std::size_t>(e.u)] != r - 1 && deg[static_cast<std::size_t>(e.v)] != r - 1) {
      cert.verdict = Verdict::not_edge_maximal;
      cert.offending_edge = e;
      return cert;
    }
  }
  cert.verdict = Verdict::valid;
  return cert;
}

Rational Rational::make(std::int64_t num, std::int64_t den) {
  if (den == 0) throw DomainError("zero denominator");
  if (den < 0) num = -num, den = -den;
  const std::int64_t g = std::gcd(num, den);
  return {num / g, den / g};
}

std::int64_t Rational::ceil() const noexcept {
  std::int64_t q = num / den;
  if (num % den != 0 && num > 0) ++q;
  return q;
}

LowerBound sat_lower_bound(const Graph& g, int r, AlphaMethod method, std::uint64_t budget) {
  check_r(r);
  LowerBound out;
  if (method == AlphaMethod::exact) {
    const AlphaResult alpha = alpha_k_exact(g, r - 2, budget);
    out.alpha = static_cast<int>(alpha.witness.size());
    out.certified = alpha.exact;
  } else {
    out.alpha = alpha_k_upper_bound(g, r - 2);
    out.certified = true;
  }
  out.value = Rational::make(static_cast<std::int64_t>(r - 1) * (g.order() - out.alpha), 2);
  out.ceiled = out.value.ceil();
  return out;
}

SaturationCertificate greedy_saturated(const Graph& g, int r, std::span<const Edge> order) {
  check_r(r);
  if (order.size() != g.size()) throw DomainError("edge order must be a permutation of E(G)");
  std::set<Edge> seen;
  for (const Edge& e : order)
    if (e.u < 0 || e.v >= g.order() || !g.has_edge(e.u, e.v) || !seen.insert(e).second)
      throw DomainError("edge order must be a permutation of E(G)");

  std::vector<Vertex> deg(static_cast<std::size_t>(g.order()), 0);
  EdgeList h;
  for (const Edge& e : order) {
    auto& du = deg[static_cast<std::size_t>(e.u)];
    auto& dv = deg[static_cast<std::size_t>(e.v)];
    if (du <= r - 2 && dv <= r - 2) {
      h.push_back(e);
      ++du, ++dv;
    }
  }
  SaturationCertificate cert = check_certificate(h, g, r);
  assert(cert.valid());
  return cert;
}

SaturationCertificate greedy_saturated(const Graph& g, int r) {
  const EdgeList order = g.edges();
  return greedy_saturated(g, r, order);
}

UpperBound construct_upper(const Graph& g, int r, IndependentSetMethod method, std::uint64_t budget) {
  check_r(r);
  UpperBound out;
  if (method == IndependentSetMethod::exact) {
    AlphaResult alpha = alpha_k_exact(g, 0, budget);
    out.alpha_exact = alpha.exact;
    out.downgraded = !alpha.exact;
    out.independent_set = std::move(alpha.witness);
  } else {
    out.independent_set = greedy_k_independent(g, 0);
  }

  const Vertex n = g.order();
  const Vertex d = r - 1;
  std::vector<char> in_s(static_cast<std::size_t>(n), 0);
  std::vector<Vertex> s = out.independent_set.vertices;
  for (Vertex v : s) in_s[static_cast<std::size_t>(v)] = 1;

  while (true) {
    const std::int64_t rest_size = n - static_cast<Vertex>(s.size());
    if (rest_size > 0 && (rest_size * d) % 2 == 0) {
      std::vector<Vertex> rest;
      rest.reserve(static_cast<std::size_t>(rest_size));
      for (Vertex v = 0; v < n; ++v)
        if (!in_s[static_cast<std::size_t>(v)]) rest.push_back(v);
      const InducedSubgraph sub = induced_subgraph(g, rest);
      const FactorResult factor = d_factor(sub.graph, d);
      if (factor.found) {
        EdgeList h;
        h.reserve(factor.edges.size());
        for (const Edge& e : factor.edges)
          h.emplace_back(sub.original[static_cast<std::size_t>(e.u)], sub.original[static_cast<std::size_t>(e.v)]);
        out.certificate = check_certificate(h, g, r);
        assert(out.certificate.valid());
        out.upper = out.certificate.edge_count();
        out.ell_used = static_cast<Vertex>(s.size());
        out.via_factor = true;
        return out;
      }
    }
    if (s.empty()) break;

    // Remove the vertex of S whose return keeps the minimum degree of G - S highest.
    std::vector<Vertex> deg_rest(static_cast<std::size_t>(n), 0);
    for (Vertex v = 0; v < n; ++v)
      if (!in_s[static_cast<std::size_t>(v)])
        for (Vertex w : g.neighbors(v)) deg_rest[static_cast<std::size_t>(v)] += !in_s[static_cast<std::size_t>(w)];
    std::sort(s.begin(), s.end());
    std::vector<char> adj(static_cast<std::size_t>(n), 0);
    std::size_t pick = 0;
    Vertex pick_min = -1;
    for (std::size_t i = 0; i < s.size(); ++i) {
      const Vertex c = s[i];
      for (Vertex w : g.neighbors(c)) adj[static_cast<std::size_t>(w)] = 1;
      Vertex own = 0;
      Vertex lowest = std::numeric_limits<Vertex>::max();
      for (Vertex v = 0; v < n; ++v) {
        if (in_s[static_cast<std::size_t>(v)]) continue;
        own += adj[static_cast<std::size_t>(v)];
        lowest = std::min<Vertex>(lowest, deg_rest[static_cast<std::size_t>(v)] + adj[static_cast<std::size_t>(v)]);
      }
      lowest = std::min(lowest, own);
      for (Vertex w : g.neighbors(c)) adj[static_cast<std::size_t>(w)] = 0;
      if (lowest > pick_min) pick_min = lowest, pick = i;
    }
    in_s[static_cast<std::size_t>(s[pick])] = 0;
    s.erase(s.begin() + static_cast<std::ptrdiff_t>(pick));
  }

  out.certificate = greedy_saturated(g, r);
  out.upper = out.certificate.edge_count();
  out.ell_used = 0;
  out.via_factor = false;
  return out;
}

namespace {

// Edge branch and bound for sat_exact. Edges are decided strictly in order, so
// the decision depth equals the index of the next undecided edge.
class SatExactSolver {
 public:
  SatExactSolver(const Graph& g, int r, std::uint64_t budget)
      : g_(g), cap_(r - 1), n_(static_cast<std::size_t>(g.order())), budget_(budget) {
    edges_ = g.edges();
    std::stable_sort(edges_.begin(), edges_.end(), [&](const Edge& a, const Edge& b) {
      return g.degree(a.u) + g.degree(a.v) > g.degree(b.u) + g.degree(b.v);
    });
    deg_.assign(n_, 0);
    undecided_.assign(n_, 0);
    for (Vertex v = 0; v < g.order(); ++v) undecided_[static_cast<std::size_t>(v)] = g.degree(v);
    take_.assign(edges_.size(), 0);
    forced_.assign(n_, 0);
    paired_.assign(n_, 0);
  }

  // Lower bound for the empty assignment.
  std::int64_t root_bound() { return bound(); }

  void solve(std::int64_t incumbent, EdgeList incumbent_edges) {
    best_ = incumbent;
    best_edges_ = std::move(incumbent_edges);
    dfs(0, 0);
  }

  std::int64_t best() const noexcept { return best_; }
  const EdgeList& best_edges() const noexcept { return best_edges_; }
  bool aborted() const noexcept { return aborted_; }
  std::uint64_t nodes() const noexcept { return nodes_; }

 private:
  bool can_fill(std::size_t v) const noexcept { return deg_[v] + undecided_[v] >= cap_; }

  // ceil(sum of final-degree lower bounds / 2); kInfeasible when some excluded
  // edge can no longer get a full endpoint.
  static constexpr std::int64_t kInfeasible = std::numeric_limits<std::int64_t>::max();

  std::int64_t bound() {
    std::fill(forced_.begin(), forced_.end(), 0);
    for (std::size_t i : excluded_) {
      const auto u = static_cast<std::size_t>(edges_[i].u), v = static_cast<std::size_t>(edges_[i].v);
      if (deg_[u] == cap_ || deg_[v] == cap_) continue;
      const bool cu = can_fill(u), cv = can_fill(v);
      if (!cu && !cv) return kInfeasible;
      if (!cu) forced_[v] = 1;
      if (!cv) forced_[u] = 1;
    }
    std::int64_t total = 0;
    for (std::size_t v = 0; v < n_; ++v) total += forced_[v] ? cap_ : deg_[v];
    // Each remaining excluded edge needs one endpoint filled; a greedy matching
    // of such edges charges the cheaper endpoint once.
    std::fill(paired_.begin(), paired_.end(), 0);
    for (std::size_t i : excluded_) {
      const auto u = static_cast<std::size_t>(edges_[i].u), v = static_cast<std::size_t>(edges_[i].v);
      if (deg_[u] == cap_ || deg_[v] == cap_ || forced_[u] || forced_[v] || paired_[u] || paired_[v]) continue;
      paired_[u] = paired_[v] = 1;
      total += std::min(cap_ - deg_[u], cap_ - deg_[v]);
    }
    return (total + 1) / 2;
  }

  void dfs(std::size_t i, std::int64_t committed) {
    if (aborted_) return;
    if (++nodes_ > budget_) {
      aborted_ = true;
      return;
    }
    if (bound() >= best_) return;
    if (i == edges_.size()) {
      best_ = committed;
      best_edges_.clear();
      for (std::size_t j = 0; j < edges_.size(); ++j)
        if (take_[j]) best_edges_.push_back(edges_[j]);
      return;
    }
    const auto u = static_cast<std::size_t>(edges_[i].u), v = static_cast<std::size_t>(edges_[i].v);
    --undecided_[u];
    --undecided_[v];
    if (deg_[u] < cap_ && deg_[v] < cap_) {
      ++deg_[u];
      ++deg_[v];
      take_[i] = 1;
      dfs(i + 1, committed + 1);
      take_[i] = 0;
      --deg_[u];
      --deg_[v];
    }
    excluded_.push_back(i);
    dfs(i + 1, committed);
    excluded_.pop_back();
    ++undecided_[u];
    ++undecided_[v];
  }

  const Graph& g_;
  int cap_;
  std::size_t n_;
  std::uint64_t budget_;
  EdgeList edges_;
  std::vector<int> deg_;
  std::vector<int> undecided_;
  std::vector<char> take_;
  std::vector<char> forced_;
  std::vector<char> paired_;
  std::vector<std::size_t> excluded_;
  std::int64_t best_ = 0;
  EdgeList best_edges_;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
};

}  // namespace

ExactResult sat_exact(const Graph& g, int r, std::uint64_t budget) {
  check_r(r);
  SaturationCertificate incumbent = greedy_saturated(g, r);
  const UpperBound upper = construct_upper(g, r, IndependentSetMethod::greedy);
  if (upper.upper < incumbent.edge_count()) incumbent = upper.certificate;

  std::int64_t lower = 0;
  const LowerBound lb = sat_lower_bound(g, r, AlphaMethod::exact, budget);
  if (lb.certified) lower = lb.ceiled;

  SatExactSolver solver(g, r, budget);
  lower = std::max(lower, solver.root_bound());

  ExactResult out;
  if (lower >= incumbent.edge_count()) {
    out.value = out.lower = incumbent.edge_count();
    out.exact = true;
    out.witness = std::move(incumbent);
    return out;
  }
  solver.solve(incumbent.edge_count(), incumbent.edges);
  out.nodes = solver.nodes();
  out.exact = !solver.aborted();
  out.value = solver.best();
  out.lower = out.exact ? out.value : lower;
  out.witness = check_certificate(solver.best_edges(), g, r);
  assert(out.witness.valid());
  return out;
}

BoundsReport bounds_report(const Graph& g, int r, bool with_exact, std::uint64_t budget) {
  BoundsReport report;
  const LowerBound lower = sat_lower_bound(g, r, AlphaMethod::exact, budget);
  report.lower = lower.value;
  report.lower_ceiled = lower.ceiled;
  report.lower_certified = lower.certified;
  UpperBound upper = construct_upper(g, r, IndependentSetMethod::exact, budget);
  report.upper = upper.upper;
  report.ell_used = upper.ell_used;
  report.certificate = std::move(upper.certificate);
  report.independent_set = std::move(upper.independent_set);
  if (with_exact) {
    ExactResult exact = sat_exact(g, r, budget);
    if (exact.exact) report.exact = exact.value;
    if (exact.value < report.upper) {
      report.upper = exact.value;
      report.certificate = std::move(exact.witness);
    }
  }
  return report;
}

std::int64_t classical_sat_star(std::int64_t n, std::int64_t r) {
  if (r < 2 || n < r + 1) throw DomainError("classical_sat_star needs r >= 2 and n >= r + 1");
  auto c2 = [](std::int64_t x) { return x * (x - 1) / 2; };
  if (2 * n <= 3 * r) return c2(r) + c2(n - r);
  // ceil(((r-1)n/2) - r^2/8) = ceil((4(r-1)n - r^2) / 8), numerator positive here.
  const std::int64_t num = 4 * (r - 1) * n - r * r;
  return (num + 7) / 8;
}

std::int64_t classical_sat_clique(std::int64_t n, std::int64_t r) {
  if (r < 2 || n < r) throw DomainError("classical_sat_clique needs n >= r >= 2");
  return (r - 2) * n - (r - 1) * (r - 2) / 2;
}

ReferenceBands reference_bands(Vertex n, const ProbParams& params, int r, double epsilon) {
  check_r(r);
  if (n < 2) throw DomainError("reference bands need n >= 2");
  if (!(epsilon >= 0.0 && epsilon < 1.0)) throw DomainError("epsilon must lie in [0, 1)");
  const double nn = static_cast<double>(n);
  const double centre = (r - 1) * nn / 2.0;
  const double shift = (r - 1) * params.log_b(nn);
  ReferenceBands out;
  out.main = {centre - (1.0 + epsilon) * shift, centre - (1.0 - epsilon) * shift};
  if (r == 2) out.matching = Band{nn / 2.0 - params.log_b(nn * params.p()), nn / 2.0 - params.log_b(std::sqrt(nn))};
  return out;
}

EdgeList min_maximal_matching_bruteforce(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.order());
  std::vector<Vertex> mate(n, -1);
  EdgeList current, best;
  bool have_best = false;

  auto maximal = [&]() {
    for (const Edge& e : g.edges())
      if (mate[static_cast<std::size_t>(e.u)] == -1 && mate[static_cast<std::size_t>(e.v)] == -1) return false;
    return true;
  };
  // Vertex v is either left unmatched or matched to a later neighbour.
  auto search = [&](auto&& self, Vertex v) -> void {
    if (have_best && current.size() >= best.size()) return;
    if (v == g.order()) {
      if (maximal()) best = current, have_best = true;
      return;
    }
    if (mate[static_cast<std::size_t>(v)] != -1) return self(self, v + 1);
    for (Vertex w : g.neighbors(v)) {
      if (w < v || mate[static_cast<std::size_t>(w)] != -1) continue;
      mate[static_cast<std::size_t>(v)] = w;
      mate[static_cast<std::size_t>(w)] = v;
      current.emplace_back(v, w);
      self(self, v + 1);
      current.pop_back();
      mate[static_cast<std::size_t>(v)] = mate[static_cast<std::size_t>(w)] = -1;
    }
    self(self, v + 1);
  };
  search(search, 0);
  std::sort(best.begin(), best.end());
  return best;
}

}  // namespace starsat
