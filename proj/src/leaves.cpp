#include "hyperacyc/leaves.hpp"

#include <algorithm>

namespace hyperacyc {

const char* to_string(LeafKind kind) {
  switch (kind) {
    case LeafKind::Alpha: return "alpha";
    case LeafKind::Beta: return "beta";
    case LeafKind::Gamma: return "gamma";
    case LeafKind::Pure: return "pure";
  }
  return "?";
}

std::optional<LeafKind> leaf_kind_from_string(std::string_view name) {
  if (name == "alpha") return LeafKind::Alpha;
  if (name == "beta") return LeafKind::Beta;
  if (name == "gamma") return LeafKind::Gamma;
  if (name == "pure") return LeafKind::Pure;
  return std::nullopt;
}

namespace {

std::vector<Edge> star_checked(const Hypergraph& h, VertexIndex x) {
  auto st = h.star(x);
  if (st.empty())
    throw UnknownVertexError(x < h.table()->size() ? h.table()->token(x)
                                                   : "#" + std::to_string(x));
  return st;
}

// Inclusion-maximum element of the star, if one exists.
std::optional<Edge> star_maximum(const std::vector<Edge>& st) {
  for (const auto& e : st) {
    bool covers_all = true;
    for (const auto& f : st) {
      if (!f.subset_of(e)) { covers_all = false; break; }
    }
    if (covers_all) return e;
  }
  return std::nullopt;
}

bool chain(const std::vector<Edge>& st) {
  for (std::size_t i = 0; i < st.size(); ++i)
    for (std::size_t j = i + 1; j < st.size(); ++j)
      if (!st[i].subset_of(st[j]) && !st[j].subset_of(st[i])) return false;
  return true;
}

bool beta_leaf_unchecked(const Hypergraph& h, VertexIndex x) {
  return chain(h.star(x));
}

}  // namespace

bool is_alpha_leaf(const Hypergraph& h, VertexIndex x) {
  return star_maximum(star_checked(h, x)).has_value();
}

bool is_beta_leaf(const Hypergraph& h, VertexIndex x) {
  return chain(star_checked(h, x));
}

bool is_gamma_leaf(const Hypergraph& h, VertexIndex x) {
  auto st = star_checked(h, x);
  if (!chain(st)) return false;
  Edge ex = *star_maximum(st);  // a chain always has a maximum
  Hypergraph rest = h.without_edge(ex);
  VertexSet nb(h.table()->size());
  for (const auto& e : rest.edges())
    if (e.contains(x)) nb = nb | e;
  for (VertexIndex y : nb.members())
    if (!beta_leaf_unchecked(h, y)) return false;
  return true;
}

bool is_pure_leaf(const Hypergraph& h, VertexIndex x) {
  VertexSet nb = h.neighbourhood(x);
  auto others = (nb - VertexSet(nb.universe(), {x})).members();
  // Neighbourhood must be a clique.
  for (std::size_t i = 0; i < others.size(); ++i) {
    for (std::size_t j = i + 1; j < others.size(); ++j) {
      bool together = false;
      for (const auto& e : h.edges())
        if (e.contains(others[i]) && e.contains(others[j])) { together = true; break; }
      if (!together) return false;
    }
  }
  // No induced triangle through x.
  for (std::size_t i = 0; i < others.size(); ++i) {
    for (std::size_t j = i + 1; j < others.size(); ++j) {
      VertexSet triple(h.table()->size(), {x, others[i], others[j]});
      auto m = h.induced(triple).minimize();
      if (m.edge_count() != 3) continue;
      bool all_pairs = true;
      for (const auto& e : m.edges())
        if (e.count() != 2) { all_pairs = false; break; }
      if (all_pairs) return false;
    }
  }
  return true;
}

bool is_leaf(const Hypergraph& h, VertexIndex x, LeafKind kind) {
  switch (kind) {
    case LeafKind::Alpha: return is_alpha_leaf(h, x);
    case LeafKind::Beta: return is_beta_leaf(h, x);
    case LeafKind::Gamma: return is_gamma_leaf(h, x);
    case LeafKind::Pure: return is_pure_leaf(h, x);
  }
  return false;
}

std::vector<VertexIndex> leaves_of(const Hypergraph& h, LeafKind kind) {
  std::vector<VertexIndex> out;
  for (VertexIndex v : h.vertex_universe().members())
    if (is_leaf(h, v, kind)) out.push_back(v);
  return out;
}

namespace {

std::optional<VertexIndex> smallest_by_token(const Hypergraph& h,
                                             const std::vector<VertexIndex>& vs) {
  if (vs.empty()) return std::nullopt;
  return *std::min_element(vs.begin(), vs.end(), [&](VertexIndex a, VertexIndex b) {
    return h.table()->rank(a) < h.table()->rank(b);
  });
}

}  // namespace

std::optional<EliminationOrder> elimination_order(const Hypergraph& h, LeafKind kind) {
  Hypergraph cur = h;
  std::vector<VertexIndex> order;
  while (!cur.empty()) {
    auto pick = smallest_by_token(cur, leaves_of(cur, kind));
    if (!pick) return std::nullopt;
    order.push_back(*pick);
    cur = cur.without_vertex(*pick);
  }
  return EliminationOrder{kind, std::move(order)};
}

std::optional<EliminationOrder> sacred_order(const Hypergraph& h, LeafKind kind,
                                             const Edge& sacred) {
  if (kind == LeafKind::Pure)
    throw Error("sacred order is defined for alpha, beta, and gamma kinds only");
  if (!h.contains_edge(sacred))
    throw EdgeNotInHypergraphError(edge_name(*h.table(), sacred));
  Hypergraph cur = h;
  std::vector<VertexIndex> order;
  while (!cur.empty()) {
    auto leaves = leaves_of(cur, kind);
    VertexSet universe = cur.vertex_universe();
    bool outside_left = !(universe - sacred).empty();
    if (outside_left) {
      // While any vertex outside the sacred edge remains, an outside leaf
      // exists whenever the hypergraph is acyclic, so insisting on one here
      // only rejects inputs that admit no order at all.
      std::erase_if(leaves, [&](VertexIndex v) { return sacred.contains(v); });
    }
    auto pick = smallest_by_token(cur, leaves);
    if (!pick) return std::nullopt;
    order.push_back(*pick);
    cur = cur.without_vertex(*pick);
  }
  return EliminationOrder{kind, std::move(order)};
}

bool verify_elimination_order(const Hypergraph& h, const EliminationOrder& eo) {
  Hypergraph cur = h;
  for (VertexIndex v : eo.order) {
    if (!cur.vertex_universe().contains(v)) return false;
    if (!is_leaf(cur, v, eo.kind)) return false;
    cur = cur.without_vertex(v);
  }
  return cur.empty();
}

}  // namespace hyperacyc
