#pragma once

#include <cstdint>
#include <optional>
#include <random>

#include "hyperacyc/hypergraph.hpp"
#include "hyperacyc/witness.hpp"

namespace hyperacyc {

// Definition-level brute force, independent of the elimination/reduction code
// paths.  Intended for desk-scale inputs: at most 30 vertices for the subset
// scans (Error beyond), and is_beta_brute additionally caps the edge count at
// 25 because it walks every edge subset.

// First vertex subset (ascending bit-pattern order over the universe) whose
// induced minimized hypergraph is a polygon.
std::optional<CycleWitness> has_cycle_brute(const Hypergraph& h);

// First vertex subset S with minimize(induced(h, S)) == { S minus {x} : x in S }.
std::optional<NonConformalClique> conformal_violation_brute(const Hypergraph& h);
bool is_conformal_brute(const Hypergraph& h);

bool is_cycle_free_brute(const Hypergraph& h);
bool is_alpha_brute(const Hypergraph& h);  // conformal and cycle-free

// Every edge subset must be cycle-free.
bool is_beta_brute(const Hypergraph& h);
std::optional<BetaCycleWitness> beta_violation_brute(const Hypergraph& h);

// Cycle-free and no triple carries the forbidden two-pairs-plus-triple shape.
bool is_gamma_brute(const Hypergraph& h);
std::optional<GammaTriangle> gamma_triangle_brute(const Hypergraph& h);

// Every hypergraph over vertex_count named vertices (v1..vn), in ascending
// edge-set bit-pattern order over the 2^n - 1 candidate edges; edge_cap keeps
// only members with at most that many edges.
class CensusStream {
 public:
  explicit CensusStream(std::size_t vertex_count,
                        std::optional<std::size_t> edge_cap = std::nullopt);

  const VertexTablePtr& table() const { return table_; }
  std::uint64_t total_uncapped() const;  // 2^(2^n - 1)

  std::optional<Hypergraph> next();
  void reset() { next_mask_ = 0; }

  Hypergraph member(std::uint64_t edge_set_mask) const;

 private:
  std::size_t n_;
  std::optional<std::size_t> cap_;
  VertexTablePtr table_;
  std::uint64_t next_mask_ = 0;
};

// Uniform edge count in 1..max_edges, then uniform candidate edges (duplicates
// collapse).  Uses raw engine output, so sequences are reproducible from the
// seed alone.
Hypergraph random_member(std::mt19937& rng, const VertexTablePtr& table,
                         std::size_t max_edges);

}  // namespace hyperacyc
