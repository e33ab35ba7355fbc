#pragma once

#include <vector>

#include "hyperacyc/hypergraph.hpp"

namespace hyperacyc {

// Cyclic tuple t1..tn (n >= 3, distinct): the minimized hypergraph induced on
// {t1..tn} is exactly the polygon {t1,t2}, {t2,t3}, ..., {tn,t1}.
struct CycleWitness {
  std::vector<VertexIndex> vertices;
};

// Pairwise-neighbouring vertex set contained in no single edge.
struct NonConformalClique {
  VertexSet clique;
};

// {center,a}, {center,b} and {center,a,b} all appear in the hypergraph induced
// on the triple.  Both published 3-vertex forbidden patterns are this shape up
// to renaming.
struct GammaTriangle {
  VertexIndex center;
  VertexIndex a;
  VertexIndex b;
};

// Closed alternating walk in the bipartite vertex-edge incidence graph:
// vertices[i] and vertices[(i+1) % k] both lie in edges[i], all distinct.
struct IncidenceCycle {
  std::vector<VertexIndex> vertices;
  std::vector<Edge> edges;
};

// Edge subset whose induced sub-hypergraph carries a cycle.
struct BetaCycleWitness {
  std::vector<Edge> edge_subset;
  CycleWitness cycle;
};

bool verify_witness(const Hypergraph& h, const CycleWitness& w);
bool verify_witness(const Hypergraph& h, const NonConformalClique& w);
bool verify_witness(const Hypergraph& h, const GammaTriangle& w);
bool verify_witness(const Hypergraph& h, const IncidenceCycle& w);
bool verify_witness(const Hypergraph& h, const BetaCycleWitness& w);

}  // namespace hyperacyc
