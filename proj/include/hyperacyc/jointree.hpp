#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hyperacyc/hypergraph.hpp"

namespace hyperacyc {

// Tree (or forest, for disconnected inputs) whose nodes are labelled by the
// edges of a hypergraph, one node per edge.  `parent` is empty for unrooted
// trees; rooted trees orient every tree edge child-to-parent and use npos for
// component roots.  `root` designates the node the rooted variant was grown
// from and is only meaningful together with `parent`.
struct JoinTree {
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  VertexTablePtr table;
  std::vector<Edge> labels;
  std::vector<std::pair<std::size_t, std::size_t>> tree_edges;
  std::vector<std::size_t> parent;
  std::optional<std::size_t> root;

  std::size_t node_count() const { return labels.size(); }
};

// Returns a join tree of h, or nullopt when none exists.  The tree is grown
// by replaying a successful reduction backwards, so presence is equivalent to
// alpha acyclicity; the result is re-verified before being returned.
std::optional<JoinTree> build_join_tree(const Hypergraph& h);

// Checks the join property: any two labels' intersection is contained in the
// label of every node on the path between them, and labels in different
// forest components are disjoint.  Throws MalformedTreeError when t is not a
// forest with injective labels (or has an inconsistent rooting).
bool verify_join_property(const JoinTree& t);

// Returns a join tree with disjoint branches rooted at the node labelled
// `root`, or nullopt when none exists (equivalently, when h is not gamma
// acyclic).  Components other than root's are rooted at their smallest edge.
// Throws EdgeNotInHypergraphError when root is not an edge of h.
std::optional<JoinTree> build_disjoint_branch_join_tree(const Hypergraph& h,
                                                        const Edge& root);

// Checks that any two nodes with no ancestor relationship carry disjoint
// labels.  Throws MalformedTreeError when t is malformed or not rooted.
bool verify_disjoint_branches(const JoinTree& t);

// Graphviz rendering; undirected edges, nodes labelled like "{x,y}".
std::string to_dot(const JoinTree& t);

}  // namespace hyperacyc
