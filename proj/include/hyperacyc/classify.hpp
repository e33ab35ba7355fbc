#pragma once

#include <optional>
#include <vector>

#include "hyperacyc/hypergraph.hpp"
#include "hyperacyc/leaves.hpp"
#include "hyperacyc/witness.hpp"

namespace hyperacyc {

// Polynomial decision procedures built on leaf elimination.  Negative answers
// come with re-verified witnesses where a generator exists: cycle tuples and
// beta cycles by bounded search (inputs up to 12 vertices / 12 edges), cliques,
// gamma triangles and incidence cycles at any size.

bool is_cycle_free(const Hypergraph& h);
bool is_alpha_acyclic(const Hypergraph& h);
bool is_beta_acyclic(const Hypergraph& h);
bool is_gamma_acyclic(const Hypergraph& h);
bool is_berge_acyclic(const Hypergraph& h);

// Maximal-clique enumeration over the co-occurrence graph; a failing clique is
// shrunk to an inclusion-minimal uncovered one.
std::optional<NonConformalClique> conformal_violation(const Hypergraph& h);
bool is_conformal(const Hypergraph& h);

// Strips degree-<=1 nodes from the bipartite incidence graph; a non-empty rest
// yields an explicit alternating cycle.
std::optional<IncidenceCycle> berge_violation(const Hypergraph& h);

// Triple scan for the two-pairs-plus-triple pattern.
std::optional<GammaTriangle> find_gamma_triangle(const Hypergraph& h);

struct AcyclicityReport {
  bool gamma = false;
  bool beta = false;
  bool alpha = false;
  bool cycle_free = false;
  bool conformal = false;
  bool berge = false;

  std::optional<CycleWitness> cycle_witness;            // !cycle_free, <= 12 vertices
  std::optional<NonConformalClique> non_conformal_clique;
  std::optional<GammaTriangle> gamma_triangle;          // cycle-free but not gamma
  std::optional<IncidenceCycle> berge_cycle;
  std::optional<BetaCycleWitness> beta_cycle;           // !beta, <= 12 edges

  std::vector<EliminationOrder> orders_used;            // one per true acyclicity flag
};

// Runs all six predicates; asserts gamma => beta => alpha => cycle-free,
// berge => gamma, and alpha == conformal && cycle-free, and re-verifies every
// witness (InternalInconsistencyError on breakage).
AcyclicityReport classify(const Hypergraph& h);

}  // namespace hyperacyc
