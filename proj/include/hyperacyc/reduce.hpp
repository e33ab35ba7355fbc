#pragma once

#include <string>
#include <variant>
#include <vector>

#include "hyperacyc/hypergraph.hpp"

namespace hyperacyc {

struct IncludedEdgeRemoval {
  Edge edge;       // strictly included in container
  Edge container;
};

struct SingletonVertexRemoval {
  VertexIndex vertex;  // lies in host and in no other edge
  Edge host;
};

struct SingletonEdgeRemoval {
  Edge edge;  // cardinality 1
};

struct Linearization {
  VertexIndex removed;  // same star as kept
  VertexIndex kept;
};

using ReductionStep =
    std::variant<IncludedEdgeRemoval, SingletonVertexRemoval, SingletonEdgeRemoval,
                 Linearization>;

struct ReductionTrace {
  std::vector<ReductionStep> steps;
  Hypergraph residual;
};

// Included-edge removal before singleton-vertex removal, lexicographically
// smallest target first.  Empty residual exactly on alpha-acyclic input.
ReductionTrace gyo_reduce(const Hypergraph& h);

// Singleton-vertex, then singleton-edge, then linearization; smallest target
// first.  Linearization removes the smallest vertex that has a smaller twin
// and keeps that twin, so class minima survive as in normalize().  Empty
// residual exactly on gamma-acyclic input.
ReductionTrace dm_reduce(const Hypergraph& h);

// Validates the step against h (StepDoesNotApplyError) and applies it.
Hypergraph apply_step(const Hypergraph& h, const ReductionStep& step);
Hypergraph replay(const Hypergraph& h, const std::vector<ReductionStep>& steps);

// Applies the step and compares the acyclicity notions it is supposed to keep:
// alpha for included-edge removal, gamma for singleton-edge removal and
// linearization, both for singleton-vertex removal.
bool check_step_preservation(const Hypergraph& h, const ReductionStep& step);

std::string step_description(const VertexTable& table, const ReductionStep& step);

}  // namespace hyperacyc
