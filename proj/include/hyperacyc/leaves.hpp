#pragma once

#include <optional>
#include <vector>

#include "hyperacyc/hypergraph.hpp"

namespace hyperacyc {

enum class LeafKind { Alpha, Beta, Gamma, Pure };

const char* to_string(LeafKind kind);
std::optional<LeafKind> leaf_kind_from_string(std::string_view name);

// x must lie in the vertex universe (UnknownVertexError otherwise).
// alpha: the star has an inclusion-maximum edge.
// beta: the star is totally ordered by inclusion.
// gamma: beta leaf whose neighbours in H minus its maximal star edge are all
//        beta leaves of H itself.
// pure: no triangle through x in any induced triple, and the neighbourhood of
//       x is a clique.
bool is_alpha_leaf(const Hypergraph& h, VertexIndex x);
bool is_beta_leaf(const Hypergraph& h, VertexIndex x);
bool is_gamma_leaf(const Hypergraph& h, VertexIndex x);
bool is_pure_leaf(const Hypergraph& h, VertexIndex x);
bool is_leaf(const Hypergraph& h, VertexIndex x, LeafKind kind);

std::vector<VertexIndex> leaves_of(const Hypergraph& h, LeafKind kind);

// Replay order: order[0] is removed first; each later element is a leaf of the
// residual induced on the not-yet-removed vertices.  Covers the whole vertex
// universe on success.
struct EliminationOrder {
  LeafKind kind;
  std::vector<VertexIndex> order;
};

// Greedy removal of the lexicographically smallest eligible leaf; reaching the
// empty hypergraph is independent of leaf choice, so the greedy loop finds an
// order exactly when one exists.
std::optional<EliminationOrder> elimination_order(const Hypergraph& h, LeafKind kind);

// Order whose prefix is exactly the vertices outside `sacred`; kind must be
// Alpha, Beta, or Gamma.  Absent exactly when no plain order exists.
std::optional<EliminationOrder> sacred_order(const Hypergraph& h, LeafKind kind,
                                             const Edge& sacred);

// Replays the order and re-checks the leaf property at every step.
bool verify_elimination_order(const Hypergraph& h, const EliminationOrder& eo);

}  // namespace hyperacyc
