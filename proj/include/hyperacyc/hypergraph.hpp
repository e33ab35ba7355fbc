#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <initializer_list>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hyperacyc/errors.hpp"

namespace hyperacyc {

using VertexIndex = std::size_t;

// Token <-> dense index map shared by a family of hypergraphs.  Indices follow
// construction order; rank() gives the position in token-sorted order, which is
// what every "lexicographically smallest" tie-break below means.
class VertexTable {
 public:
  VertexTable() = default;
  explicit VertexTable(std::vector<std::string> tokens);

  std::size_t size() const { return tokens_.size(); }
  const std::string& token(VertexIndex i) const { return tokens_.at(i); }
  std::optional<VertexIndex> find(std::string_view token) const;
  VertexIndex require(std::string_view token) const;  // UnknownVertexError if absent

  std::size_t rank(VertexIndex i) const { return rank_.at(i); }
  VertexIndex nth_by_rank(std::size_t r) const { return by_rank_.at(r); }

  static void validate_token(std::string_view token);  // MalformedTokenError

 private:
  std::vector<std::string> tokens_;
  std::vector<std::size_t> rank_;
  std::vector<VertexIndex> by_rank_;
};

using VertexTablePtr = std::shared_ptr<const VertexTable>;

// Set of vertex indices over a fixed universe size.  All sets combined by an
// operation must share the universe of their hypergraph family.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe) : bits_(universe) {}
  VertexSet(std::size_t universe, std::initializer_list<VertexIndex> members);

  std::size_t universe() const { return bits_.size(); }
  std::size_t count() const { return bits_.count(); }
  bool empty() const { return bits_.none(); }
  bool contains(VertexIndex i) const { return i < bits_.size() && bits_.test(i); }

  VertexSet& add(VertexIndex i) { bits_.set(i); return *this; }
  VertexSet& discard(VertexIndex i) { if (i < bits_.size()) bits_.reset(i); return *this; }

  bool subset_of(const VertexSet& o) const { return bits_.is_subset_of(o.bits_); }
  bool proper_subset_of(const VertexSet& o) const { return bits_.is_proper_subset_of(o.bits_); }
  bool intersects(const VertexSet& o) const { return bits_.intersects(o.bits_); }

  VertexSet operator&(const VertexSet& o) const { return VertexSet(bits_ & o.bits_); }
  VertexSet operator|(const VertexSet& o) const { return VertexSet(bits_ | o.bits_); }
  VertexSet operator-(const VertexSet& o) const { return VertexSet(bits_ - o.bits_); }

  std::vector<VertexIndex> members() const;
  std::optional<VertexIndex> single() const;  // the member, when count() == 1

  bool operator==(const VertexSet& o) const { return bits_ == o.bits_; }
  bool operator<(const VertexSet& o) const { return bits_ < o.bits_; }

 private:
  explicit VertexSet(boost::dynamic_bitset<> bits) : bits_(std::move(bits)) {}
  boost::dynamic_bitset<> bits_;
};

// An edge is a non-empty vertex set; emptiness is enforced on hypergraph
// construction, not by the type.
using Edge = VertexSet;

// e and f overlap without either containing the other.
bool intersecting(const Edge& e, const Edge& f);

// Immutable set of non-empty edges over a shared vertex table.  Vertices are
// always derived as the union of edges; nothing stores an isolated vertex.
class Hypergraph {
 public:
  Hypergraph() : table_(std::make_shared<VertexTable>()) {}
  // Drops empty sets, collapses duplicates, keeps edges sorted.
  Hypergraph(VertexTablePtr table, std::vector<Edge> edges);

  const VertexTablePtr& table() const { return table_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }
  std::size_t size() const;  // sum of edge cardinalities

  VertexSet vertex_universe() const;
  bool has_vertex(VertexIndex i) const { return vertex_universe().contains(i); }
  bool contains_edge(const Edge& e) const;

  Hypergraph induced(const VertexSet& keep) const;
  Hypergraph without_vertex(VertexIndex x) const;  // induced on universe minus x
  Hypergraph without_edge(const Edge& e) const;    // plain set difference
  Hypergraph with_edges(std::vector<Edge> extra) const;

  std::vector<Edge> star(VertexIndex x) const;     // edges containing x; empty if absent
  VertexSet neighbourhood(VertexIndex x) const;    // union of the star; UnknownVertexError
  Hypergraph minimize() const;                     // inclusion-maximal edges
  Hypergraph normalize() const;                    // merge same-star vertex classes

  bool operator==(const Hypergraph& o) const { return edges_ == o.edges_; }

 private:
  VertexTablePtr table_;
  std::vector<Edge> edges_;
};

// Build a hypergraph (and its table) from token edges, interning vertices in
// first-appearance order.  Warnings report collapsed duplicate edges.
struct BuildResult {
  Hypergraph hypergraph;
  std::vector<std::string> warnings;
};
BuildResult make_hypergraph(const std::vector<std::vector<std::string>>& token_edges);

// Dual: one fresh vertex per edge of H (named by '+'-joined sorted tokens), one
// edge per distinct star.  vertex_to_edge maps each dual vertex back to the
// edge of H it stands for.
struct DualResult {
  Hypergraph dual;
  std::vector<Edge> vertex_to_edge;
};
DualResult dual(const Hypergraph& h);

std::vector<std::string> edge_tokens(const VertexTable& table, const Edge& e);  // sorted
std::string edge_name(const VertexTable& table, const Edge& e);  // "{a,b,c}"

// True when the two edges' sorted token lists compare < lexicographically.
bool edge_tokens_less(const VertexTable& ta, const Edge& a, const VertexTable& tb, const Edge& b);

// Edges of h in canonical (token-lexicographic) order.
std::vector<Edge> edges_by_token_order(const Hypergraph& h);

}  // namespace hyperacyc
