#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace starsat {

using Vertex = std::int32_t;

// Undirected edge stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
  friend bool operator==(const Edge&, const Edge&) = default;
};

using EdgeList = std::vector<Edge>;

// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
// Immutable once built; every constructor validates the simple-graph invariants.
class Graph {
 public:
  Graph() = default;
  explicit Graph(Vertex n);  // edgeless

  // Throws DomainError on self-loops, duplicates or out-of-range ids.
  static Graph from_edges(Vertex n, std::span<const Edge> edges);

  Vertex order() const noexcept { return static_cast<Vertex>(adj_.size()); }
  std::size_t size() const noexcept { return m_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
  Vertex degree(Vertex v) const { return static_cast<Vertex>(adj_[static_cast<std::size_t>(v)].size()); }
  Vertex max_degree() const noexcept;
  Vertex min_degree() const noexcept;
  bool has_edge(Vertex u, Vertex v) const;

  // All edges in lexicographic order.
  EdgeList edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::size_t m_ = 0;
};

Graph complete_graph(Vertex n);
Graph cycle_graph(Vertex n);
Graph path_graph(Vertex n);
Graph star_graph(Vertex leaves);  // K_{1,leaves}, center 0
Graph petersen_graph();

// d-regular circulant on m vertices: offsets 1..d/2, plus m/2 when d is odd.
// Throws InfeasibleError when m*d is odd or m <= d.
Graph regular_circulant(Vertex m, Vertex d);

struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> original;  // original[i] = id in the host of new vertex i
};

// Vertices relabeled 0..|S|-1 by increasing original id. Duplicates in S are ignored.
InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

}  // namespace starsat
