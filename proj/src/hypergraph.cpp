#include "hyperacyc/hypergraph.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace hyperacyc {

void VertexTable::validate_token(std::string_view token) {
  if (token.empty())
    throw MalformedTokenError("empty vertex token");
  for (char c : token) {
    if (std::isspace(static_cast<unsigned char>(c)))
      throw MalformedTokenError("vertex token contains whitespace: '" + std::string(token) + "'");
    if (c == '#')
      throw MalformedTokenError("vertex token contains '#': '" + std::string(token) + "'");
  }
}

VertexTable::VertexTable(std::vector<std::string> tokens) : tokens_(std::move(tokens)) {
  for (const auto& t : tokens_) validate_token(t);
  by_rank_.resize(tokens_.size());
  std::iota(by_rank_.begin(), by_rank_.end(), VertexIndex{0});
  std::sort(by_rank_.begin(), by_rank_.end(),
            [&](VertexIndex a, VertexIndex b) { return tokens_[a] < tokens_[b]; });
  rank_.resize(tokens_.size());
  for (std::size_t r = 0; r < by_rank_.size(); ++r) {
    if (r > 0 && tokens_[by_rank_[r]] == tokens_[by_rank_[r - 1]])
      throw MalformedTokenError("duplicate vertex token: '" + tokens_[by_rank_[r]] + "'");
    rank_[by_rank_[r]] = r;
  }
}

std::optional<VertexIndex> VertexTable::find(std::string_view token) const {
  // Binary search over the token-sorted permutation; the table is small and
  // immutable, so no separate hash map.
  auto it = std::lower_bound(by_rank_.begin(), by_rank_.end(), token,
                             [&](VertexIndex i, std::string_view t) { return tokens_[i] < t; });
  if (it == by_rank_.end() || tokens_[*it] != token) return std::nullopt;
  return *it;
}

VertexIndex VertexTable::require(std::string_view token) const {
  auto i = find(token);
  if (!i) throw UnknownVertexError(std::string(token));
  return *i;
}

VertexSet::VertexSet(std::size_t universe, std::initializer_list<VertexIndex> members)
    : bits_(universe) {
  for (auto i : members) bits_.set(i);
}

std::vector<VertexIndex> VertexSet::members() const {
  std::vector<VertexIndex> out;
  out.reserve(bits_.count());
  for (auto i = bits_.find_first(); i != boost::dynamic_bitset<>::npos; i = bits_.find_next(i))
    out.push_back(i);
  return out;
}

std::optional<VertexIndex> VertexSet::single() const {
  if (bits_.count() != 1) return std::nullopt;
  return bits_.find_first();
}

bool intersecting(const Edge& e, const Edge& f) {
  return e.intersects(f) && !e.subset_of(f) && !f.subset_of(e);
}

Hypergraph::Hypergraph(VertexTablePtr table, std::vector<Edge> edges)
    : table_(std::move(table)) {
  edges_.reserve(edges.size());
  for (auto& e : edges) {
    if (!e.empty()) edges_.push_back(std::move(e));
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

std::size_t Hypergraph::size() const {
  std::size_t n = 0;
  for (const auto& e : edges_) n += e.count();
  return n;
}

VertexSet Hypergraph::vertex_universe() const {
  VertexSet u(table_->size());
  for (const auto& e : edges_) u = u | e;
  return u;
}

bool Hypergraph::contains_edge(const Edge& e) const {
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

Hypergraph Hypergraph::induced(const VertexSet& keep) const {
  std::vector<Edge> out;
  out.reserve(edges_.size());
  for (const auto& e : edges_) out.push_back(e & keep);
  return Hypergraph(table_, std::move(out));
}

Hypergraph Hypergraph::without_vertex(VertexIndex x) const {
  VertexSet keep = vertex_universe();
  keep.discard(x);
  return induced(keep);
}

Hypergraph Hypergraph::without_edge(const Edge& e) const {
  std::vector<Edge> out;
  out.reserve(edges_.size());
  for (const auto& f : edges_)
    if (!(f == e)) out.push_back(f);
  return Hypergraph(table_, std::move(out));
}

Hypergraph Hypergraph::with_edges(std::vector<Edge> extra) const {
  std::vector<Edge> out = edges_;
  for (auto& e : extra) out.push_back(std::move(e));
  return Hypergraph(table_, std::move(out));
}

std::vector<Edge> Hypergraph::star(VertexIndex x) const {
  std::vector<Edge> out;
  for (const auto& e : edges_)
    if (e.contains(x)) out.push_back(e);
  return out;
}

VertexSet Hypergraph::neighbourhood(VertexIndex x) const {
  auto st = star(x);
  if (st.empty())
    throw UnknownVertexError(x < table_->size() ? table_->token(x) : "#" + std::to_string(x));
  VertexSet out(table_->size());
  for (const auto& e : st) out = out | e;
  return out;
}

Hypergraph Hypergraph::minimize() const {
  std::vector<Edge> keep;
  for (const auto& e : edges_) {
    bool maximal = true;
    for (const auto& f : edges_) {
      if (e.proper_subset_of(f)) { maximal = false; break; }
    }
    if (maximal) keep.push_back(e);
  }
  return Hypergraph(table_, std::move(keep));
}

Hypergraph Hypergraph::normalize() const {
  // Group vertices by star (bitmask over edge positions); one simultaneous
  // pass suffices: distinct edges cannot collapse when every removed vertex
  // leaves its class representative behind in the same edges.
  auto verts = vertex_universe().members();
  std::map<std::vector<std::size_t>, VertexIndex> rep;  // star -> lex-smallest vertex
  for (VertexIndex v : verts) {
    std::vector<std::size_t> key;
    for (std::size_t i = 0; i < edges_.size(); ++i)
      if (edges_[i].contains(v)) key.push_back(i);
    auto [it, inserted] = rep.try_emplace(std::move(key), v);
    if (!inserted && table_->rank(v) < table_->rank(it->second)) it->second = v;
  }
  VertexSet keep(table_->size());
  for (const auto& [_, v] : rep) keep.add(v);
  return induced(keep);
}

BuildResult make_hypergraph(const std::vector<std::vector<std::string>>& token_edges) {
  std::vector<std::string> tokens;
  std::unordered_map<std::string, VertexIndex> index;
  for (const auto& edge : token_edges) {
    for (const auto& t : edge) {
      VertexTable::validate_token(t);
      if (index.try_emplace(t, tokens.size()).second) tokens.push_back(t);
    }
  }
  auto table = std::make_shared<VertexTable>(tokens);
  std::vector<Edge> edges;
  std::vector<std::string> warnings;
  std::vector<Edge> seen;
  for (const auto& edge : token_edges) {
    Edge e(table->size());
    for (const auto& t : edge) e.add(*table->find(t));
    if (e.empty()) continue;
    if (std::find(seen.begin(), seen.end(), e) != seen.end())
      warnings.push_back("duplicate edge collapsed: " + edge_name(*table, e));
    else
      seen.push_back(e);
    edges.push_back(std::move(e));
  }
  return BuildResult{Hypergraph(std::move(table), std::move(edges)), std::move(warnings)};
}

std::vector<std::string> edge_tokens(const VertexTable& table, const Edge& e) {
  std::vector<std::string> toks;
  for (VertexIndex v : e.members()) toks.push_back(table.token(v));
  std::sort(toks.begin(), toks.end());
  return toks;
}

std::string edge_name(const VertexTable& table, const Edge& e) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& t : edge_tokens(table, e)) {
    if (!first) os << ',';
    os << t;
    first = false;
  }
  os << '}';
  return os.str();
}

bool edge_tokens_less(const VertexTable& ta, const Edge& a, const VertexTable& tb, const Edge& b) {
  return edge_tokens(ta, a) < edge_tokens(tb, b);
}

std::vector<Edge> edges_by_token_order(const Hypergraph& h) {
  std::vector<Edge> out = h.edges();
  const auto& t = *h.table();
  std::sort(out.begin(), out.end(),
            [&](const Edge& a, const Edge& b) { return edge_tokens_less(t, a, t, b); });
  return out;
}

DualResult dual(const Hypergraph& h) {
  const auto& table = *h.table();
  auto ordered = edges_by_token_order(h);
  std::vector<std::string> names;
  names.reserve(ordered.size());
  for (const auto& e : ordered) {
    auto toks = edge_tokens(table, e);
    std::string name;
    for (std::size_t i = 0; i < toks.size(); ++i) {
      if (i) name += '+';
      name += toks[i];
    }
    names.push_back(std::move(name));
  }
  auto dual_table = std::make_shared<VertexTable>(names);
  std::vector<Edge> dual_edges;
  for (VertexIndex v : h.vertex_universe().members()) {
    Edge star_edge(dual_table->size());
    for (std::size_t i = 0; i < ordered.size(); ++i)
      if (ordered[i].contains(v)) star_edge.add(i);
    dual_edges.push_back(std::move(star_edge));
  }
  std::vector<Edge> vertex_to_edge = ordered;
  return DualResult{Hypergraph(std::move(dual_table), std::move(dual_edges)),
                    std::move(vertex_to_edge)};
}

}  // namespace hyperacyc
