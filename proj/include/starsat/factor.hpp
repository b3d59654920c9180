#pragma once

#include "starsat/graph.hpp"
#include "starsat/prob_params.hpp"

namespace starsat {

struct FactorResult {
  bool found = false;
  EdgeList edges;  // the d-regular spanning subgraph when found
  Vertex d = 0;
};

// d-regular spanning subgraph via reduction to perfect matching.
//
// Each edge e = uv becomes two gadget vertices e_u - e_v joined by an edge and
// each vertex v becomes d copies joined to every e_v at v. A perfect matching
// either pairs e_u with e_v (e unused) or pairs both with copies (e used), and
// the copies force exactly d used edges at every vertex.
//
// Odd n*d or a vertex of degree < d returns not-found without matching.
FactorResult d_factor(const Graph& g, Vertex d);

// Exhaustive edge-subset search; refuses graphs with more than 24 edges.
FactorResult d_factor_bruteforce(const Graph& g, Vertex d);

// True iff every vertex has degree d in `edges` and each edge lies in g.
bool is_d_factor(const Graph& g, const EdgeList& edges, Vertex d);

// Embedding condition for a max-degree-delta graph into G(n, p):
// (delta^2 + 1)^2 < n and p^delta > 10 ln(t) / t, t = floor(n / (delta^2 + 1)).
// Diagnostic only.
bool af_embedding_condition(Vertex n, Vertex delta, const ProbParams& params);

}  // namespace starsat
