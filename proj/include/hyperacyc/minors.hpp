#pragma once

#include <utility>
#include <vector>

#include "hyperacyc/hypergraph.hpp"

namespace hyperacyc {

// Replaces edge e by the non-empty subset s, collapsing duplicates.  Throws
// EdgeNotInHypergraphError when e is absent and InvalidSubsetError when s is
// empty or not contained in e.
Hypergraph shrink_edge(const Hypergraph& h, const Edge& e, const Edge& s);

// Replaces x by y in every edge containing x.  x and y must be distinct
// vertices of h sharing an edge; throws UnknownVertexError or
// NotNeighboursError otherwise.
Hypergraph contract_edge(const Hypergraph& h, VertexIndex x, VertexIndex y);

// A gamma-acyclic preimage of an alpha-acyclic hypergraph under edge
// contraction.  Replaying `plan` on `expanded` (each pair contracting the
// first vertex into the second) yields a hypergraph isomorphic to the input.
struct GammaExpansion {
  Hypergraph expanded;
  std::vector<std::pair<VertexIndex, VertexIndex>> plan;
};

// Builds the expansion along a join tree of h: every vertex of an edge gets a
// private tagged copy, and every vertex shared with a tree neighbour gets a
// connector copy living in both expanded edges.  Throws NotAlphaAcyclicError
// when h has no join tree.
GammaExpansion gamma_expansion(const Hypergraph& h);

}  // namespace hyperacyc
