#include "hyperacyc/minors.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "hyperacyc/errors.hpp"
#include "hyperacyc/jointree.hpp"

namespace hyperacyc {

Hypergraph shrink_edge(const Hypergraph& h, const Edge& e, const Edge& s) {
  if (!h.contains_edge(e))
    throw EdgeNotInHypergraphError(edge_name(*h.table(), e) +
                                   " is not an edge of the hypergraph");
  if (s.empty() || s.universe() != e.universe() || !s.subset_of(e))
    throw InvalidSubsetError("shrink target is not a non-empty subset of " +
                             edge_name(*h.table(), e));
  return h.without_edge(e).with_edges({s});
}

Hypergraph contract_edge(const Hypergraph& h, VertexIndex x, VertexIndex y) {
  const auto& table = *h.table();
  if (!h.has_vertex(x) || x >= table.size())
    throw UnknownVertexError("contraction source is not a vertex of the hypergraph");
  if (!h.has_vertex(y) || y >= table.size())
    throw UnknownVertexError("contraction target is not a vertex of the hypergraph");
  if (x == y || !h.neighbourhood(x).contains(y))
    throw NotNeighboursError(table.token(x), table.token(y));
  std::vector<Edge> edges;
  edges.reserve(h.edge_count());
  for (const auto& e : h.edges()) {
    Edge f = e;
    if (f.contains(x)) {
      f.discard(x);
      f.add(y);
    }
    edges.push_back(std::move(f));
  }
  return Hypergraph(h.table(), std::move(edges));
}

namespace {

std::string plus_name(const VertexTable& table, const Edge& e) {
  std::string out;
  for (const auto& tok : edge_tokens(table, e)) {
    if (!out.empty()) out += '+';
    out += tok;
  }
  return out;
}

std::string tag(const std::string& vertex, const std::string& a, const std::string& b) {
  const std::string& lo = std::min(a, b);
  const std::string& hi = std::max(a, b);
  return vertex + "@" + lo + "~" + hi;
}

}  // namespace

GammaExpansion gamma_expansion(const Hypergraph& h) {
  auto tree = build_join_tree(h);
  if (!tree) throw NotAlphaAcyclicError();

  const auto& table = *h.table();
  const std::size_t n = tree->node_count();
  std::vector<std::string> node_name(n);
  for (std::size_t a = 0; a < n; ++a)
    node_name[a] = plus_name(table, tree->labels[a]);

  std::vector<std::vector<std::size_t>> adj(n);
  for (const auto& [a, b] : tree->tree_edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }

  // Tag tokens: one self copy per (vertex, containing node) and one connector
  // copy per (vertex, tree edge whose endpoints share it).
  std::vector<std::string> tokens;
  std::map<std::string, VertexIndex> index_of;
  auto intern = [&](std::string tok) {
    auto it = index_of.find(tok);
    if (it != index_of.end()) return it->second;
    tokens.push_back(tok);
    return index_of[std::move(tok)] = tokens.size() - 1;
  };

  std::vector<std::vector<VertexIndex>> node_members(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (VertexIndex x : tree->labels[a].members()) {
      const std::string& xt = table.token(x);
      node_members[a].push_back(intern(tag(xt, node_name[a], node_name[a])));
      for (std::size_t b : adj[a])
        if (tree->labels[b].contains(x))
          node_members[a].push_back(intern(tag(xt, node_name[a], node_name[b])));
    }
  }

  auto out_table = std::make_shared<VertexTable>(tokens);
  std::vector<Edge> out_edges;
  out_edges.reserve(n);
  for (std::size_t a = 0; a < n; ++a) {
    Edge e(out_table->size());
    for (VertexIndex v : node_members[a]) e.add(v);
    out_edges.push_back(std::move(e));
  }

  GammaExpansion result{Hypergraph(out_table, std::move(out_edges)), {}};

  // Per original vertex: walk its (connected) subtree of containing nodes
  // from the smallest-labelled one, folding connector then self copies into
  // the representative.  Every contracted pair shares an edge when its turn
  // comes, because the previous contraction moved the representative there.
  for (std::size_t r = 0; r < table.size(); ++r) {
    VertexIndex x = table.nth_by_rank(r);
    std::vector<std::size_t> holders;
    for (std::size_t a = 0; a < n; ++a)
      if (tree->labels[a].contains(x)) holders.push_back(a);
    if (holders.empty()) continue;
    const std::string& xt = table.token(x);
    std::size_t start = *std::min_element(
        holders.begin(), holders.end(), [&](std::size_t a, std::size_t b) {
          return edge_tokens_less(table, tree->labels[a], table, tree->labels[b]);
        });
    VertexIndex rep = index_of.at(tag(xt, node_name[start], node_name[start]));
    std::vector<bool> seen(n, false);
    seen[start] = true;
    std::vector<std::size_t> queue{start};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      std::size_t a = queue[qi];
      if (a != start) {
        result.plan.emplace_back(
            index_of.at(tag(xt, node_name[a], node_name[a])), rep);
      }
      for (std::size_t b : adj[a]) {
        if (seen[b] || !tree->labels[b].contains(x)) continue;
        seen[b] = true;
        result.plan.emplace_back(
            index_of.at(tag(xt, node_name[a], node_name[b])), rep);
        queue.push_back(b);
      }
    }
  }
  return result;
}

}  // namespace hyperacyc
