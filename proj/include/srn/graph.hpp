#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "srn/bitmatrix.hpp"

namespace srn {

using Edge = std::pair<int, int>;  // stored with first < second

// Simple undirected labeled graph on vertices 0..n-1. No self-loops, no
// parallel edges. Values are immutable once built and safe to share across
// threads; the mutating members exist for construction only.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int vertex_count);

  int vertex_count() const { return n_; }
  int edge_count() const { return edge_count_; }

  bool has_edge(int u, int v) const;
  void add_edge(int u, int v);     // no-op if present; throws on self-loop / bad vertex
  void remove_edge(int u, int v);  // no-op if absent

  int degree(int v) const { return adj_.row_count(v); }
  std::span<const std::uint64_t> row(int v) const { return adj_.row(v); }
  const BitMatrix& adjacency() const { return adj_; }

  template <typename Fn>
  void for_each_neighbor(int v, Fn&& fn) const {
    adj_.for_each_in_row(v, fn);
  }

  std::vector<Edge> edges() const;           // sorted lexicographically
  std::vector<int> degree_sequence() const;  // non-increasing

  bool operator==(const Graph& other) const;

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  int edge_count_ = 0;
  BitMatrix adj_{0};
};

Graph make_star(int n);  // K_{1,n}, center = vertex 0
Graph make_cycle(int n);
Graph make_path(int n);  // path on n vertices
Graph make_complete(int n);
Graph make_complete_bipartite(int a, int b);
Graph disjoint_union(const Graph& a, const Graph& b);

int max_degree(const Graph& g);
int min_degree(const Graph& g);

// Relabeled copy: vertex v of g becomes perm[v].
Graph permuted(const Graph& g, std::span<const int> perm);

// Vertex sets of connected components, each sorted, ordered by smallest member.
std::vector<std::vector<int>> connected_components(const Graph& g);

// Two-coloring of the vertices if g is bipartite, otherwise nullopt.
std::optional<std::vector<int>> bipartition(const Graph& g);

}  // namespace srn
