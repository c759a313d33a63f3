#pragma once

#include <utility>
#include <vector>

#include "srn/graph.hpp"

namespace srn {

// Proper edge coloring: edges sharing a vertex get distinct colors.
// Entries follow Graph::edges() order; colors are compacted to 0..color_count-1.
struct ProperEdgeColoring {
  int color_count = 0;
  std::vector<int> colors;
};

// Partition of the edge set of an even-regular graph into spanning 2-regular
// subgraphs.
struct TwoFactorization {
  std::vector<std::vector<Edge>> factors;
};

// <= Delta+1 colors in general (fan/Kempe-chain construction); <= Delta colors
// when g is bipartite (alternating-path recoloring).
ProperEdgeColoring proper_edge_coloring(const Graph& g);

// Closed walks covering each edge exactly once, one per component with edges.
// Each walk is a vertex sequence v_0, ..., v_L with v_0 == v_L.
// Requires every vertex degree to be even.
std::vector<std::vector<int>> euler_circuit(const Graph& g);

// Embed g into a Delta(g)-regular simple graph by repeated doubling: two
// disjoint copies with each deficient vertex joined to its twin. Vertices
// 0..n-1 of the result are g itself (the embedding is the identity prefix).
struct RegularEmbedding {
  Graph host;
  std::vector<int> embedding;
};
RegularEmbedding embed_regular(const Graph& g);

// Petersen: 2k-regular graph -> k edge-disjoint 2-factors, per component via
// Euler orientation and matching decomposition of the out/in double graph.
TwoFactorization two_factorize(const Graph& h);

// k disjoint perfect matchings partitioning E(b); b must be bipartite and
// k-regular.
std::vector<std::vector<Edge>> decompose_regular_bipartite(const Graph& b, int k);

}  // namespace srn
