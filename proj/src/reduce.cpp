#include "hyperacyc/reduce.hpp"

#include <algorithm>

#include "hyperacyc/classify.hpp"

namespace hyperacyc {

namespace {

// Picks the element whose token list is lexicographically smallest.
const Edge* smallest_edge(const VertexTable& t, const std::vector<Edge>& es) {
  const Edge* best = nullptr;
  for (const auto& e : es)
    if (!best || edge_tokens_less(t, e, t, *best)) best = &e;
  return best;
}

std::optional<VertexIndex> smallest_vertex(const Hypergraph& h,
                                           const std::vector<VertexIndex>& vs) {
  if (vs.empty()) return std::nullopt;
  return *std::min_element(vs.begin(), vs.end(), [&](VertexIndex a, VertexIndex b) {
    return h.table()->rank(a) < h.table()->rank(b);
  });
}

std::optional<ReductionStep> next_gyo_step(const Hypergraph& h) {
  std::vector<Edge> included;
  for (const auto& e : h.edges())
    for (const auto& f : h.edges())
      if (e.proper_subset_of(f)) { included.push_back(e); break; }
  if (!included.empty()) {
    const Edge* target = smallest_edge(*h.table(), included);
    std::vector<Edge> containers;
    for (const auto& f : h.edges())
      if (target->proper_subset_of(f)) containers.push_back(f);
    return IncludedEdgeRemoval{*target, *smallest_edge(*h.table(), containers)};
  }
  std::vector<VertexIndex> singles;
  for (VertexIndex v : h.vertex_universe().members())
    if (h.star(v).size() == 1) singles.push_back(v);
  if (auto v = smallest_vertex(h, singles))
    return SingletonVertexRemoval{*v, h.star(*v).front()};
  return std::nullopt;
}

std::optional<ReductionStep> next_dm_step(const Hypergraph& h) {
  std::vector<VertexIndex> singles;
  for (VertexIndex v : h.vertex_universe().members())
    if (h.star(v).size() == 1) singles.push_back(v);
  if (auto v = smallest_vertex(h, singles))
    return SingletonVertexRemoval{*v, h.star(*v).front()};

  std::vector<Edge> unit;
  for (const auto& e : h.edges())
    if (e.count() == 1) unit.push_back(e);
  if (!unit.empty()) return SingletonEdgeRemoval{*smallest_edge(*h.table(), unit)};

  auto verts = h.vertex_universe().members();
  std::sort(verts.begin(), verts.end(), [&](VertexIndex a, VertexIndex b) {
    return h.table()->rank(a) < h.table()->rank(b);
  });
  for (std::size_t i = 1; i < verts.size(); ++i) {
    auto star_i = h.star(verts[i]);
    for (std::size_t j = 0; j < i; ++j) {
      if (h.star(verts[j]) == star_i)
        return Linearization{verts[i], verts[j]};
    }
  }
  return std::nullopt;
}

ReductionTrace run(const Hypergraph& h,
                   std::optional<ReductionStep> (*pick)(const Hypergraph&)) {
  ReductionTrace trace{{}, h};
  while (auto step = pick(trace.residual)) {
    trace.residual = apply_step(trace.residual, *step);
    trace.steps.push_back(std::move(*step));
  }
  return trace;
}

}  // namespace

ReductionTrace gyo_reduce(const Hypergraph& h) { return run(h, next_gyo_step); }

ReductionTrace dm_reduce(const Hypergraph& h) { return run(h, next_dm_step); }

Hypergraph apply_step(const Hypergraph& h, const ReductionStep& step) {
  const auto& table = *h.table();
  if (const auto* s = std::get_if<IncludedEdgeRemoval>(&step)) {
    if (!h.contains_edge(s->edge) || !h.contains_edge(s->container) ||
        !s->edge.proper_subset_of(s->container))
      throw StepDoesNotApplyError("included-edge removal does not apply to " +
                                  edge_name(table, s->edge));
    return h.without_edge(s->edge);
  }
  if (const auto* s = std::get_if<SingletonVertexRemoval>(&step)) {
    if (!h.contains_edge(s->host) || !s->host.contains(s->vertex) ||
        h.star(s->vertex).size() != 1)
      throw StepDoesNotApplyError("singleton-vertex removal does not apply");
    return h.without_vertex(s->vertex);
  }
  if (const auto* s = std::get_if<SingletonEdgeRemoval>(&step)) {
    if (!h.contains_edge(s->edge) || s->edge.count() != 1)
      throw StepDoesNotApplyError("singleton-edge removal does not apply to " +
                                  edge_name(table, s->edge));
    return h.without_edge(s->edge);
  }
  const auto& s = std::get<Linearization>(step);
  if (s.removed == s.kept || h.star(s.removed).empty() ||
      h.star(s.removed) != h.star(s.kept))
    throw StepDoesNotApplyError("linearization does not apply");
  return h.without_vertex(s.removed);
}

Hypergraph replay(const Hypergraph& h, const std::vector<ReductionStep>& steps) {
  Hypergraph cur = h;
  for (const auto& s : steps) cur = apply_step(cur, s);
  return cur;
}

bool check_step_preservation(const Hypergraph& h, const ReductionStep& step) {
  Hypergraph after = apply_step(h, step);
  bool check_alpha = std::holds_alternative<IncludedEdgeRemoval>(step) ||
                     std::holds_alternative<SingletonVertexRemoval>(step);
  bool check_gamma = !std::holds_alternative<IncludedEdgeRemoval>(step);
  if (check_alpha && is_alpha_acyclic(h) != is_alpha_acyclic(after)) return false;
  if (check_gamma && is_gamma_acyclic(h) != is_gamma_acyclic(after)) return false;
  return true;
}

std::string step_description(const VertexTable& table, const ReductionStep& step) {
  if (const auto* s = std::get_if<IncludedEdgeRemoval>(&step))
    return "remove included edge " + edge_name(table, s->edge) + " inside " +
           edge_name(table, s->container);
  if (const auto* s = std::get_if<SingletonVertexRemoval>(&step))
    return "remove singleton vertex " + table.token(s->vertex) + " from " +
           edge_name(table, s->host);
  if (const auto* s = std::get_if<SingletonEdgeRemoval>(&step))
    return "remove singleton edge " + edge_name(table, s->edge);
  const auto& s = std::get<Linearization>(step);
  return "linearize " + table.token(s.removed) + " into " + table.token(s.kept);
}

}  // namespace hyperacyc
