#include "srn/enumerate.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace srn {

namespace {

// Every (k+1)-edge class arises from a k-edge class by adding an edge between
// existing vertices, attaching one fresh vertex, or adding a disjoint edge
// (undoing an edge deletion that isolated zero, one or two endpoints).
void extend_all(const Graph& g, std::map<CanonicalCode, Graph>& next) {
  int n = g.vertex_count();
  auto consider = [&](Graph&& h) {
    CanonicalCode code = canonical_form(h);
    next.emplace(std::move(code), std::move(h));
  };

  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      if (g.has_edge(u, v)) continue;
      Graph h(n);
      for (auto [a, b] : g.edges()) h.add_edge(a, b);
      h.add_edge(u, v);
      consider(std::move(h));
    }

  for (int u = 0; u < n; ++u) {
    Graph h(n + 1);
    for (auto [a, b] : g.edges()) h.add_edge(a, b);
    h.add_edge(u, n);
    consider(std::move(h));
  }

  {
    Graph h(n + 2);
    for (auto [a, b] : g.edges()) h.add_edge(a, b);
    h.add_edge(n, n + 1);
    consider(std::move(h));
  }
}

}  // namespace

const std::vector<Graph>& GraphEnumerator::level(int edge_count) {
  if (edge_count < 1) throw std::invalid_argument("enumerate_graphs: edge count must be >= 1");
  if (edge_count > budget_)
    throw std::invalid_argument("enumerate_graphs: edge count " + std::to_string(edge_count) +
                                " exceeds budget " + std::to_string(budget_));

  if (levels_.empty()) {
    Graph k2(2);
    k2.add_edge(0, 1);
    levels_.push_back({std::move(k2)});
  }
  while (static_cast<int>(levels_.size()) < edge_count) {
    std::map<CanonicalCode, Graph> next;
    for (const Graph& g : levels_.back()) extend_all(g, next);
    std::vector<Graph> flat;
    flat.reserve(next.size());
    for (auto& [code, g] : next) flat.push_back(std::move(g));
    levels_.push_back(std::move(flat));
  }
  return levels_[edge_count - 1];
}

std::vector<Graph> enumerate_graphs(int edge_count, int budget) {
  GraphEnumerator e(budget);
  return e.level(edge_count);
}

}  // namespace srn
