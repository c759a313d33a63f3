#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "srn/coloring.hpp"
#include "srn/graph.hpp"
#include "srn/star_forest.hpp"

namespace srn {

enum class ArrowStatus { arrows, does_not_arrow, undecided };

const char* to_string(ArrowStatus s);

struct SearchBudget {
  std::uint64_t max_nodes = 2'000'000'000;  // edge-color assignments explored
  std::chrono::milliseconds max_time{0};    // 0 = no wall-clock limit
  int threads = 1;
  bool symmetry_breaking = true;  // collapse color swaps between equal forests
};

struct ArrowVerdict {
  ArrowStatus status = ArrowStatus::undecided;
  std::optional<EdgeColoring> counterexample;  // present iff does_not_arrow
  std::uint64_t colorings_explored = 0;
  std::chrono::microseconds elapsed{0};

  bool arrows() const { return status == ArrowStatus::arrows; }
};

// Decides g -> (F_1,...,F_q) exactly by depth-first search over edge
// colorings, pruning a branch as soon as some color class contains its
// forest. When the relation fails, the returned counterexample is the
// lexicographically least free coloring in the search's fixed edge order
// (edges sorted by BFS from a maximum-degree vertex), and it is re-validated
// through verify_free before being returned. Budget exhaustion yields the
// distinct `undecided` outcome, never a guess.
ArrowVerdict arrows(const Graph& g, const std::vector<StarForest>& forests,
                    const SearchBudget& budget = {});

// Same contract; kept as the explicitly certificate-checked entry point.
ArrowVerdict arrows_with_certificate_check(const Graph& g,
                                           const std::vector<StarForest>& forests,
                                           const SearchBudget& budget = {});

// The fixed edge order used by the search (exposed for tests).
std::vector<Edge> search_edge_order(const Graph& g);

}  // namespace srn
