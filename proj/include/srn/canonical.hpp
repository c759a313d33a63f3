#pragma once

#include <compare>
#include <string>

#include "srn/graph.hpp"

namespace srn {

// Byte code identifying an isomorphism class: equal codes iff isomorphic,
// within the supported vertex range.
struct CanonicalCode {
  std::string bytes;

  auto operator<=>(const CanonicalCode&) const = default;
  std::string hex() const;
};

inline constexpr int kCanonicalVertexCap = 32;

// Label-invariant code. Each connected component is canonicalized as the
// minimum packed adjacency bit string over vertex orderings compatible with
// its color-refinement partition; component codes are then sorted and
// concatenated. Throws std::invalid_argument above kCanonicalVertexCap.
CanonicalCode canonical_form(const Graph& g);

}  // namespace srn
