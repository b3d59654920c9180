#pragma once

#include "starsat/graph.hpp"

namespace starsat {

// Maximum-cardinality matching of a general graph (blossom shrinking).
EdgeList max_matching(const Graph& g);

// True iff the edges are pairwise disjoint and all belong to g.
bool is_matching(const Graph& g, const EdgeList& edges);

}  // namespace starsat
