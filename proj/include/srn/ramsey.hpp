#pragma once

#include <optional>
#include <string>
#include <vector>

#include "srn/arrowing.hpp"
#include "srn/canonical.hpp"
#include "srn/enumerate.hpp"
#include "srn/graph.hpp"
#include "srn/star_forest.hpp"

namespace srn {

// Values l_q,...,l_p whose sum is the conjectured size Ramsey number:
// l_k = max over index tuples (j_1,...,j_q) with sum k of
// (n_{1,j_1}-1) + ... + (n_{q,j_q}-1) + 1.
struct LSequence {
  std::vector<int> values;  // non-increasing
  long long total = 0;
};

LSequence l_sequence(const std::vector<StarForest>& forests);
long long conjectured_size_ramsey(const std::vector<StarForest>& forests);

// Disjoint union of stars K_{1,l_k}; always arrows the tuple and realizes the
// conjectured upper bound.
Graph witness_graph(const std::vector<StarForest>& forests);

enum class InstanceClassKind {
  star_vs_forest,
  same_size_stars,
  odd_stars_vs_forest,
  two_stars_vs_forest,
  all_odd,
  gyori_schelp_condition,
  conjecture_only,
};

const char* to_string(InstanceClassKind k);

struct InstanceClass {
  InstanceClassKind kind = InstanceClassKind::conjecture_only;
  std::string details;

  bool proved() const { return kind != InstanceClassKind::conjecture_only; }
};

// First matching proved case in a fixed priority order (two-color instances).
InstanceClass classify_instance(const StarForest& f1, const StarForest& f2);
std::vector<InstanceClass> all_matching_classes(const StarForest& f1, const StarForest& f2);

// Complete predicted list of Ramsey-minimal graphs, one per isomorphism
// class; only the classes with a proved characterization are supported
// (star-vs-forest, same-size-stars, odd-stars-vs-forest).
std::vector<Graph> extremal_family(const InstanceClass& cls, const StarForest& f1,
                                   const StarForest& f2);

struct ExhaustiveOptions {
  int max_edges = kDefaultEnumerationBudget;
  int enum_budget = kDefaultEnumerationBudget;
  SearchBudget per_graph{};
  int threads = 1;
};

struct ExhaustiveResult {
  std::optional<int> value;           // smallest edge count that arrows
  std::vector<Graph> minimal_graphs;  // all arrowing classes at that count
  bool complete = true;               // false if some verdict was undecided
};

// Ascends e = 1, 2, ... testing every isomorphism class; never reports an
// unproven value (undecided verdicts flag the result as partial instead).
ExhaustiveResult size_ramsey_exhaustive(const std::vector<StarForest>& forests,
                                        const ExhaustiveOptions& options);

struct CharacterizationReport {
  InstanceClass cls;
  long long conjectured_total = 0;
  std::optional<int> exhaustive_value;
  std::vector<Graph> predicted;  // sorted by canonical code
  std::vector<Graph> found;      // sorted by canonical code
  bool complete = true;
  bool equal = false;
  std::vector<std::string> discrepancies;  // graph6 of set differences
};

// Cross-validates extremal_family against size_ramsey_exhaustive.
CharacterizationReport verify_characterization(const StarForest& f1, const StarForest& f2,
                                               const ExhaustiveOptions& options);

}  // namespace srn
