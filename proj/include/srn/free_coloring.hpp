#pragma once

#include <stdexcept>
#include <vector>

#include "srn/coloring.hpp"
#include "srn/graph.hpp"
#include "srn/star_forest.hpp"

namespace srn {

// The degree hypotheses under which the free-coloring construction applies.
// Raised when neither branch covers the input; this says nothing about
// whether a free coloring exists, only that this construction cannot build one.
struct LemmaHypothesesError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct LemmaColoring {
  EdgeColoring coloring;  // two colors: 0 = red, 1 = blue
  int branch = 0;         // 1 = proper-coloring partition, 2 = 2-factorization
};

// Builds a 2-coloring whose red subgraph has max degree <= n-1 and blue
// subgraph max degree <= m-1 (hence no monochromatic K_{1,n} / K_{1,m}).
// Requires Delta(g) <= n+m-3, or Delta(g) == n+m-2 with n and m both odd.
LemmaColoring lemma_free_coloring(const Graph& g, int n, int m);

// True iff no color class i contains forests[i]. The coloring must be total
// on E(g) and have exactly forests.size() colors.
bool verify_free(const Graph& g, const EdgeColoring& c, const std::vector<StarForest>& forests);

}  // namespace srn
