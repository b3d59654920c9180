#include "starsat/factor.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "starsat/detail/blossom.hpp"
#include "starsat/error.hpp"

namespace starsat {

namespace {

void check_degree(Vertex d) {
  if (d < 1) throw DomainError("factor degree must be at least 1");
}

// Greedy degree-capped subgraph used to seed the matching: vertices by
// increasing degree, each taking its lowest-degree available neighbours.
std::vector<char> greedy_capped(const Graph& g, const EdgeList& edges, Vertex d) {
  const auto n = static_cast<std::size_t>(g.order());
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return g.degree(a) < g.degree(b); });
  std::vector<Vertex> load(n, 0);
  std::set<Edge> chosen;
  for (Vertex u : order) {
    std::vector<Vertex> nbrs(g.neighbors(u).begin(), g.neighbors(u).end());
    std::stable_sort(nbrs.begin(), nbrs.end(), [&](Vertex a, Vertex b) { return g.degree(a) < g.degree(b); });
    for (Vertex w : nbrs) {
      if (load[static_cast<std::size_t>(u)] >= d) break;
      if (load[static_cast<std::size_t>(w)] >= d || chosen.count(Edge(u, w))) continue;
      chosen.insert(Edge(u, w));
      ++load[static_cast<std::size_t>(u)];
      ++load[static_cast<std::size_t>(w)];
    }
  }
  std::vector<char> used(edges.size(), 0);
  for (std::size_t i = 0; i < edges.size(); ++i) used[i] = chosen.count(edges[i]) ? 1 : 0;
  return used;
}

FactorResult perfect_matching_factor(const Graph& g) {
  std::vector<std::pair<std::int32_t, std::int32_t>> pairs;
  for (const Edge& e : g.edges()) pairs.emplace_back(e.u, e.v);
  const detail::CsrGraph csr = detail::make_csr(g.order(), pairs);
  detail::BlossomMatcher matcher(csr);
  for (const auto& [u, v] : pairs)
    if (matcher.mate(u) == -1 && matcher.mate(v) == -1) matcher.match(u, v);
  for (Vertex v = 0; v < g.order(); ++v)
    if (matcher.mate(v) == -1 && !matcher.augment_from(v)) return {false, {}, 1};
  FactorResult out{true, {}, 1};
  for (Vertex v = 0; v < g.order(); ++v)
    if (matcher.mate(v) > v) out.edges.emplace_back(v, matcher.mate(v));
  return out;
}

}  // namespace

FactorResult d_factor(const Graph& g, Vertex d) {
  check_degree(d);
  const std::int64_t n = g.order();
  if ((n * d) % 2 != 0 || (n > 0 && g.min_degree() < d)) return {false, {}, d};
  if (n == 0) return {true, {}, d};
  if (d == 1) return perfect_matching_factor(g);

  const EdgeList edges = g.edges();
  const auto m = static_cast<std::int32_t>(edges.size());
  // Gadget ids: 2i / 2i+1 are the u / v sides of edge i; copies follow at 2m + v*d + j.
  const std::int32_t copy_base = 2 * m;
  auto copy_id = [&](Vertex v, Vertex j) { return copy_base + v * d + j; };

  std::vector<std::pair<std::int32_t, std::int32_t>> pairs;
  pairs.reserve(static_cast<std::size_t>(m) * (1 + 2 * static_cast<std::size_t>(d)));
  for (std::int32_t i = 0; i < m; ++i) {
    pairs.emplace_back(2 * i, 2 * i + 1);
    for (Vertex j = 0; j < d; ++j) {
      pairs.emplace_back(2 * i, copy_id(edges[static_cast<std::size_t>(i)].u, j));
      pairs.emplace_back(2 * i + 1, copy_id(edges[static_cast<std::size_t>(i)].v, j));
    }
  }
  const std::int32_t gadget_order = copy_base + static_cast<std::int32_t>(n) * d;
  const detail::CsrGraph csr = detail::make_csr(gadget_order, pairs);
  detail::BlossomMatcher matcher(csr);

  const std::vector<char> used = greedy_capped(g, edges, d);
  std::vector<Vertex> next_copy(static_cast<std::size_t>(n), 0);
  for (std::int32_t i = 0; i < m; ++i) {
    const Edge& e = edges[static_cast<std::size_t>(i)];
    if (used[static_cast<std::size_t>(i)]) {
      matcher.match(2 * i, copy_id(e.u, next_copy[static_cast<std::size_t>(e.u)]++));
      matcher.match(2 * i + 1, copy_id(e.v, next_copy[static_cast<std::size_t>(e.v)]++));
    } else {
      matcher.match(2 * i, 2 * i + 1);
    }
  }
  // Only copies can be free after seeding; one failed search rules out a perfect matching.
  for (std::int32_t v = copy_base; v < gadget_order; ++v)
    if (matcher.mate(v) == -1 && !matcher.augment_from(v)) return {false, {}, d};

  FactorResult out{true, {}, d};
  for (std::int32_t i = 0; i < m; ++i)
    if (matcher.mate(2 * i) != 2 * i + 1) out.edges.push_back(edges[static_cast<std::size_t>(i)]);
  return out;
}

FactorResult d_factor_bruteforce(const Graph& g, Vertex d) {
  check_degree(d);
  if (g.size() > 24) throw DomainError("d_factor_bruteforce is limited to 24 edges");
  const EdgeList edges = g.edges();
  const auto n = static_cast<std::size_t>(g.order());
  std::vector<Vertex> load(n, 0);
  std::vector<char> take(edges.size(), 0);

  // Depth-first over include/exclude per edge, tracking load.
  auto search = [&](auto&& self, std::size_t i) -> bool {
    if (i == edges.size()) {
      for (Vertex l : load)
        if (l != d) return false;
      return true;
    }
    const Edge& e = edges[i];
    auto& lu = load[static_cast<std::size_t>(e.u)];
    auto& lv = load[static_cast<std::size_t>(e.v)];
    if (lu < d && lv < d) {
      ++lu, ++lv;
      take[i] = 1;
      if (self(self, i + 1)) return true;
      --lu, --lv;
      take[i] = 0;
    }
    return self(self, i + 1);
  };
  if (!search(search, 0)) return {false, {}, d};
  FactorResult out{true, {}, d};
  for (std::size_t i = 0; i < edges.size(); ++i)
    if (take[i]) out.edges.push_back(edges[i]);
  return out;
}

bool is_d_factor(const Graph& g, const EdgeList& edges, Vertex d) {
  std::vector<Vertex> load(static_cast<std::size_t>(g.order()), 0);
  std::set<Edge> seen;
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v >= g.order() || e.u == e.v || !g.has_edge(e.u, e.v) || !seen.insert(e).second) return false;
    ++load[static_cast<std::size_t>(e.u)];
    ++load[static_cast<std::size_t>(e.v)];
  }
  return std::all_of(load.begin(), load.end(), [d](Vertex l) { return l == d; });
}

bool af_embedding_condition(Vertex n, Vertex delta, const ProbParams& params) {
  if (delta < 1) throw DomainError("delta must be at least 1");
  const double block = static_cast<double>(delta) * delta + 1.0;
  if (!(block * block < static_cast<double>(n))) return false;
  const double t = std::floor(static_cast<double>(n) / block);
  return std::pow(params.p(), delta) > 10.0 * std::log(t) / t;
}

}  // namespace starsat
