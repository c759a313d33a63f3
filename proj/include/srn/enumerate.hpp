#pragma once

#include <map>
#include <vector>

#include "srn/canonical.hpp"
#include "srn/graph.hpp"

namespace srn {

inline constexpr int kDefaultEnumerationBudget = 8;

// One representative per isomorphism class of graphs with exactly the given
// number of edges and no isolated vertices, ordered by canonical code.
// Throws std::invalid_argument when edge_count exceeds the budget.
std::vector<Graph> enumerate_graphs(int edge_count, int budget = kDefaultEnumerationBudget);

// Incremental enumerator: level k holds all isolated-vertex-free classes with
// k edges, grown by single-edge extension with canonical deduplication.
class GraphEnumerator {
 public:
  explicit GraphEnumerator(int budget = kDefaultEnumerationBudget) : budget_(budget) {}

  const std::vector<Graph>& level(int edge_count);
  int budget() const { return budget_; }

 private:
  int budget_;
  std::vector<std::vector<Graph>> levels_;  // levels_[k] = classes with k+1 edges
};

}  // namespace srn
