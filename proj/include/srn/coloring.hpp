#pragma once

#include <vector>

namespace srn {

// Total assignment of graph edges to color indices 0..color_count-1.
// Entries follow Graph::edges() order (sorted endpoint pairs).
// Color 0 is red and color 1 is blue in the two-color constructions.
struct EdgeColoring {
  int color_count = 0;
  std::vector<int> colors;

  bool operator==(const EdgeColoring&) const = default;
};

}  // namespace srn
