#pragma once

#include <optional>
#include <vector>

#include "hyperacyc/hypergraph.hpp"

namespace hyperacyc {

// Vertex bijection carrying the edges of `a` onto the edges of `b`.
// image[i] is the b-index of a-vertex i (only meaningful for vertices of a).
struct IsoMapping {
  std::vector<VertexIndex> image;
};

// Backtracking search over degree-compatible vertex assignments; vertices of
// `a` are tried in token order and candidates in token order, so the returned
// witness is the lexicographically least one.
std::optional<IsoMapping> find_isomorphism(const Hypergraph& a, const Hypergraph& b);

bool isomorphic(const Hypergraph& a, const Hypergraph& b);

}  // namespace hyperacyc
