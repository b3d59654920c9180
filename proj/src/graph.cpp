#include "starsat/graph.hpp"

#include <algorithm>
#include <cassert>
#include <string>

#include "starsat/error.hpp"
#include "starsat/prob_params.hpp"

namespace starsat {

ProbParams::ProbParams(double p) : p_(p), q_(1.0 - p) {
  if (!(p > 0.0 && p < 1.0)) throw DomainError("edge probability must lie in (0, 1), got " + std::to_string(p));
}

Graph::Graph(Vertex n) {
  if (n < 0) throw DomainError("vertex count must be nonnegative");
  adj_.resize(static_cast<std::size_t>(n));
}

Graph Graph::from_edges(Vertex n, std::span<const Edge> edges) {
  Graph g(n);
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v >= n)
      throw DomainError("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "} out of range for n=" +
                        std::to_string(n));
    if (e.u == e.v) throw DomainError("self-loop at vertex " + std::to_string(e.u));
    g.adj_[static_cast<std::size_t>(e.u)].push_back(e.v);
    g.adj_[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  std::size_t degree_sum = 0;
  for (auto& list : g.adj_) {
    std::sort(list.begin(), list.end());
    if (std::adjacent_find(list.begin(), list.end()) != list.end()) throw DomainError("duplicate edge");
    degree_sum += list.size();
  }
  g.m_ = degree_sum / 2;
  assert(g.m_ == edges.size());
  return g;
}

Vertex Graph::max_degree() const noexcept {
  Vertex best = 0;
  for (const auto& list : adj_) best = std::max(best, static_cast<Vertex>(list.size()));
  return best;
}

Vertex Graph::min_degree() const noexcept {
  if (adj_.empty()) return 0;
  Vertex best = static_cast<Vertex>(adj_.front().size());
  for (const auto& list : adj_) best = std::min(best, static_cast<Vertex>(list.size()));
  return best;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  const auto& list = adj_[static_cast<std::size_t>(u)];
  return std::binary_search(list.begin(), list.end(), v);
}

EdgeList Graph::edges() const {
  EdgeList out;
  out.reserve(m_);
  for (Vertex u = 0; u < order(); ++u)
    for (Vertex v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

Graph complete_graph(Vertex n) {
  EdgeList e;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return Graph::from_edges(n, e);
}

Graph cycle_graph(Vertex n) {
  if (n < 3) throw DomainError("cycle needs at least 3 vertices");
  EdgeList e;
  for (Vertex i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph::from_edges(n, e);
}

Graph path_graph(Vertex n) {
  EdgeList e;
  for (Vertex i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph::from_edges(n, e);
}

Graph star_graph(Vertex leaves) {
  EdgeList e;
  for (Vertex i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return Graph::from_edges(leaves + 1, e);
}

Graph petersen_graph() {
  EdgeList e;
  for (Vertex i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);          // outer cycle
    e.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    e.emplace_back(i, 5 + i);                // spokes
  }
  return Graph::from_edges(10, e);
}

Graph regular_circulant(Vertex m, Vertex d) {
  if (d < 0) throw DomainError("degree must be nonnegative");
  if (m <= d)
    throw InfeasibleError("no " + std::to_string(d) + "-regular graph on " + std::to_string(m) + " vertices");
  if ((static_cast<std::int64_t>(m) * d) % 2 != 0)
    throw InfeasibleError("m*d is odd: no " + std::to_string(d) + "-regular graph on " + std::to_string(m) +
                          " vertices");
  EdgeList e;
  for (Vertex offset = 1; offset <= d / 2; ++offset)
    for (Vertex i = 0; i < m; ++i) e.emplace_back(i, (i + offset) % m);
  if (d % 2 == 1)
    for (Vertex i = 0; i < m / 2; ++i) e.emplace_back(i, i + m / 2);
  // With m > d every offset pair is distinct, so no duplicates arise.
  Graph g = Graph::from_edges(m, e);
  assert(g.max_degree() == d && g.min_degree() == d);
  return g;
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  InducedSubgraph out;
  out.original.assign(vertices.begin(), vertices.end());
  std::sort(out.original.begin(), out.original.end());
  out.original.erase(std::unique(out.original.begin(), out.original.end()), out.original.end());
  std::vector<Vertex> index(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < out.original.size(); ++i) {
    Vertex v = out.original[i];
    if (v < 0 || v >= g.order()) throw DomainError("vertex " + std::to_string(v) + " out of range");
    index[static_cast<std::size_t>(v)] = static_cast<Vertex>(i);
  }
  EdgeList e;
  for (std::size_t i = 0; i < out.original.size(); ++i)
    for (Vertex w : g.neighbors(out.original[i])) {
      Vertex j = index[static_cast<std::size_t>(w)];
      if (j > static_cast<Vertex>(i)) e.emplace_back(static_cast<Vertex>(i), j);
    }
  out.graph = Graph::from_edges(static_cast<Vertex>(out.original.size()), e);
  return out;
}

}  // namespace starsat
