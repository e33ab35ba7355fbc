#include "hyperacyc/witness.hpp"

#include <algorithm>

namespace hyperacyc {

bool verify_witness(const Hypergraph& h, const CycleWitness& w) {
  const auto& vs = w.vertices;
  if (vs.size() < 3) return false;
  VertexSet s(h.table()->size());
  for (auto v : vs) {
    if (s.contains(v)) return false;  // distinct
    s.add(v);
  }
  if (!s.subset_of(h.vertex_universe())) return false;
  std::vector<Edge> polygon;
  for (std::size_t i = 0; i < vs.size(); ++i)
    polygon.emplace_back(h.table()->size(),
                         std::initializer_list<VertexIndex>{vs[i], vs[(i + 1) % vs.size()]});
  std::sort(polygon.begin(), polygon.end());
  polygon.erase(std::unique(polygon.begin(), polygon.end()), polygon.end());
  if (polygon.size() != vs.size()) return false;  // tuple repeated an adjacency
  return h.induced(s).minimize().edges() == polygon;
}

bool verify_witness(const Hypergraph& h, const NonConformalClique& w) {
  auto members = w.clique.members();
  if (members.size() < 3) return false;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      bool together = false;
      for (const auto& e : h.edges())
        if (e.contains(members[i]) && e.contains(members[j])) { together = true; break; }
      if (!together) return false;
    }
  }
  for (const auto& e : h.edges())
    if (w.clique.subset_of(e)) return false;
  return true;
}

bool verify_witness(const Hypergraph& h, const GammaTriangle& w) {
  if (w.center == w.a || w.center == w.b || w.a == w.b) return false;
  VertexSet t(h.table()->size(), {w.center, w.a, w.b});
  auto induced = h.induced(t);
  Edge ca(h.table()->size(), {w.center, w.a});
  Edge cb(h.table()->size(), {w.center, w.b});
  return induced.contains_edge(ca) && induced.contains_edge(cb) && induced.contains_edge(t);
}

bool verify_witness(const Hypergraph& h, const IncidenceCycle& w) {
  const std::size_t k = w.vertices.size();
  if (k < 2 || w.edges.size() != k) return false;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      if (w.vertices[i] == w.vertices[j]) return false;
      if (w.edges[i] == w.edges[j]) return false;
    }
  }
  for (std::size_t i = 0; i < k; ++i) {
    if (!h.contains_edge(w.edges[i])) return false;
    if (!w.edges[i].contains(w.vertices[i])) return false;
    if (!w.edges[i].contains(w.vertices[(i + 1) % k])) return false;
  }
  return true;
}

bool verify_witness(const Hypergraph& h, const BetaCycleWitness& w) {
  for (const auto& e : w.edge_subset)
    if (!h.contains_edge(e)) return false;
  Hypergraph sub(h.table(), w.edge_subset);
  if (sub.edge_count() != w.edge_subset.size()) return false;  // distinct, non-empty
  return verify_witness(sub, w.cycle);
}

}  // namespace hyperacyc
