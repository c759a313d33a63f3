#pragma once

#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "srn/coloring.hpp"
#include "srn/graph.hpp"

namespace srn {

// Disjoint union of stars K_{1,n_1} ⊔ ... ⊔ K_{1,n_s}, kept as the
// non-increasing list of star sizes (all >= 1).
struct StarForest {
  std::vector<int> sizes;

  static StarForest normalize(std::vector<int> sizes);
  static StarForest parse(const std::string& text);  // "3,2,2"

  int component_count() const { return static_cast<int>(sizes.size()); }
  int total_edges() const { return std::accumulate(sizes.begin(), sizes.end(), 0); }
  std::string to_string() const;

  bool operator==(const StarForest&) const = default;
  auto operator<=>(const StarForest&) const = default;
};

// Exact test for pairwise vertex-disjoint stars with center degrees
// >= n_1,...,>= n_s inside g.
bool contains_star_forest(const Graph& g, const StarForest& f);

// Same test on the spanning subgraph formed by the edges of one color class.
bool contains_in_color(const Graph& g, const EdgeColoring& c, int color, const StarForest& f);

namespace detail {
// Core packing search over raw adjacency rows (also used by the arrowing
// engine on its incrementally maintained color-class matrices).
bool contains_stars(const BitMatrix& adj, std::span<const int> sizes);
}  // namespace detail

}  // namespace srn
