#include "hyperacyc/jointree.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <variant>

#include "hyperacyc/errors.hpp"
#include "hyperacyc/reduce.hpp"

namespace hyperacyc {

namespace {

constexpr std::size_t npos = JoinTree::npos;

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

struct Structure {
  std::vector<std::vector<std::size_t>> adj;
  std::vector<std::size_t> component;
  std::size_t component_count = 0;
};

// Shared structural validation for the two verifiers.  Checks everything the
// join/disjointness predicates take for granted and throws MalformedTreeError
// instead of silently reporting false.
Structure validate_structure(const JoinTree& t) {
  const std::size_t n = t.labels.size();
  if (!t.table && n > 0)
    throw MalformedTreeError("join tree with nodes but no vertex table");
  for (const auto& l : t.labels) {
    if (l.empty()) throw MalformedTreeError("node label is empty");
    if (l.universe() != t.table->size())
      throw MalformedTreeError("node label belongs to a different vertex table");
  }
  {
    std::vector<Edge> sorted = t.labels;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw MalformedTreeError("node labels are not injective");
  }

  Structure st;
  st.adj.resize(n);
  std::set<std::pair<std::size_t, std::size_t>> undirected;
  for (const auto& [a, b] : t.tree_edges) {
    if (a >= n || b >= n || a == b)
      throw MalformedTreeError("tree edge with bad endpoints");
    if (!undirected.insert(std::minmax(a, b)).second)
      throw MalformedTreeError("duplicate tree edge");
    st.adj[a].push_back(b);
    st.adj[b].push_back(a);
  }

  st.component.assign(n, npos);
  for (std::size_t start = 0; start < n; ++start) {
    if (st.component[start] != npos) continue;
    std::vector<std::size_t> stack{start};
    st.component[start] = st.component_count;
    while (!stack.empty()) {
      std::size_t v = stack.back();
      stack.pop_back();
      for (std::size_t w : st.adj[v])
        if (st.component[w] == npos) {
          st.component[w] = st.component_count;
          stack.push_back(w);
        }
    }
    ++st.component_count;
  }
  if (t.tree_edges.size() + st.component_count != n)
    throw MalformedTreeError("tree edges contain a cycle");

  if (!t.parent.empty()) {
    if (t.parent.size() != n)
      throw MalformedTreeError("parent array does not match the node count");
    std::set<std::pair<std::size_t, std::size_t>> oriented;
    for (std::size_t v = 0; v < n; ++v) {
      std::size_t p = t.parent[v];
      if (p == npos) continue;
      if (p >= n || p == v) throw MalformedTreeError("parent link with bad target");
      auto key = std::minmax(v, p);
      if (!undirected.count(key))
        throw MalformedTreeError("parent link is not a tree edge");
      if (!oriented.insert(key).second)
        throw MalformedTreeError("tree edge oriented twice");
    }
    if (oriented.size() != t.tree_edges.size())
      throw MalformedTreeError("rooting leaves tree edges unoriented");
  }
  if (t.root) {
    if (t.parent.empty()) throw MalformedTreeError("root set on an unrooted tree");
    if (*t.root >= n || t.parent[*t.root] != npos)
      throw MalformedTreeError("designated root has a parent");
  }
  return st;
}

}  // namespace

bool verify_join_property(const JoinTree& t) {
  Structure st = validate_structure(t);
  const std::size_t n = t.labels.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      Edge inter = t.labels[i] & t.labels[j];
      if (inter.empty()) continue;
      if (st.component[i] != st.component[j]) return false;
      std::vector<std::size_t> pred(n, npos);
      std::vector<std::size_t> queue{i};
      pred[i] = i;
      for (std::size_t qi = 0; qi < queue.size() && pred[j] == npos; ++qi)
        for (std::size_t w : st.adj[queue[qi]])
          if (pred[w] == npos) {
            pred[w] = queue[qi];
            queue.push_back(w);
          }
      for (std::size_t v = j;; v = pred[v]) {
        if (!inter.subset_of(t.labels[v])) return false;
        if (v == i) break;
      }
    }
  }
  return true;
}

bool verify_disjoint_branches(const JoinTree& t) {
  validate_structure(t);
  if (t.parent.empty() || !t.root)
    throw MalformedTreeError("disjoint-branch check needs a rooted tree");
  const std::size_t n = t.labels.size();
  auto ancestor = [&](std::size_t a, std::size_t b) {
    for (std::size_t v = b; v != npos; v = t.parent[v])
      if (v == a) return true;
    return false;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (!ancestor(i, j) && !ancestor(j, i) &&
          t.labels[i].intersects(t.labels[j]))
        return false;
  return true;
}

std::optional<JoinTree> build_join_tree(const Hypergraph& h) {
  ReductionTrace trace = gyo_reduce(h);
  if (!trace.residual.empty()) return std::nullopt;

  std::vector<Hypergraph> states;
  states.reserve(trace.steps.size());
  {
    Hypergraph cur = h;
    for (const auto& s : trace.steps) {
      states.push_back(cur);
      cur = apply_step(cur, s);
    }
  }

  JoinTree t;
  t.table = h.table();
  std::map<Edge, std::size_t> node_of;
  auto node_at = [&](const Edge& e) {
    auto it = node_of.find(e);
    if (it == node_of.end())
      throw InternalInconsistencyError("replay refers to an edge with no node");
    return it->second;
  };
  auto add_node = [&](const Edge& label) {
    t.labels.push_back(label);
    node_of[label] = t.labels.size() - 1;
    return t.labels.size() - 1;
  };

  // Replay the trace backwards; after undoing step k the labels are exactly
  // the edges of states[k].
  for (std::size_t k = trace.steps.size(); k-- > 0;) {
    const auto& step = trace.steps[k];
    if (const auto* ier = std::get_if<IncludedEdgeRemoval>(&step)) {
      std::size_t c = node_at(ier->container);
      t.tree_edges.emplace_back(add_node(ier->edge), c);
    } else if (const auto* svr = std::get_if<SingletonVertexRemoval>(&step)) {
      Edge rem = svr->host;
      rem.discard(svr->vertex);
      if (rem.empty()) {
        add_node(svr->host);
      } else if (states[k].contains_edge(rem)) {
        // the shrunk edge collapsed onto a pre-existing one; re-insert as a
        // neighbour of that survivor
        std::size_t g = node_at(rem);
        t.tree_edges.emplace_back(add_node(svr->host), g);
      } else {
        std::size_t g = node_at(rem);
        node_of.erase(rem);
        t.labels[g] = svr->host;
        node_of[svr->host] = g;
      }
    } else {
      throw InternalInconsistencyError("unexpected step kind in a GYO trace");
    }
  }

  std::vector<Edge> sorted = t.labels;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != h.edges() || !verify_join_property(t))
    throw InternalInconsistencyError("constructed join tree fails verification");
  return t;
}

namespace {

// One reduction run over a connected component, with enough bookkeeping to
// replay it backwards: the hypergraph and the sacred remnant before each step.
struct BiasedRun {
  std::vector<ReductionStep> steps;
  std::vector<Hypergraph> states;
  std::vector<Edge> sacred_before;
  bool complete = false;
};

// Picks the next reduction step, preferring ones that leave the sacred edge's
// vertices alone.  Steps touching the remnant are a last resort, ordered so
// that deleting the remnant outright comes after shrinking it.
std::optional<ReductionStep> next_biased_step(const Hypergraph& h, const Edge& sacred) {
  std::vector<VertexIndex> avoid_sv, forced_sv;
  for (VertexIndex v : h.vertex_universe().members()) {
    auto star = h.star(v);
    if (star.size() != 1) continue;
    (star.front() == sacred ? forced_sv : avoid_sv).push_back(v);
  }
  if (auto v = smallest_vertex(h, avoid_sv))
    return SingletonVertexRemoval{*v, h.star(*v).front()};

  std::vector<Edge> avoid_se, forced_se;
  for (const auto& e : h.edges())
    if (e.count() == 1) (e == sacred ? forced_se : avoid_se).push_back(e);
  if (!avoid_se.empty())
    return SingletonEdgeRemoval{*smallest_edge(*h.table(), avoid_se)};

  auto verts = h.vertex_universe().members();
  std::sort(verts.begin(), verts.end(), [&](VertexIndex a, VertexIndex b) {
    return h.table()->rank(a) < h.table()->rank(b);
  });
  std::optional<Linearization> avoid_lin, forced_lin;
  for (std::size_t i = 1; i < verts.size() && !avoid_lin; ++i) {
    auto star_i = h.star(verts[i]);
    for (std::size_t j = 0; j < i; ++j) {
      if (h.star(verts[j]) != star_i) continue;
      auto& slot = sacred.contains(verts[i]) ? forced_lin : avoid_lin;
      if (!slot) slot = Linearization{verts[i], verts[j]};
      break;
    }
  }
  if (avoid_lin) return *avoid_lin;
  if (auto v = smallest_vertex(h, forced_sv))
    return SingletonVertexRemoval{*v, h.star(*v).front()};
  if (forced_lin) return *forced_lin;
  if (!forced_se.empty()) return SingletonEdgeRemoval{forced_se.front()};
  return std::nullopt;
}

BiasedRun run_biased(const Hypergraph& comp, const Edge& sacred0) {
  BiasedRun run;
  Hypergraph cur = comp;
  Edge s = sacred0;
  while (!cur.empty()) {
    auto step = next_biased_step(cur, s);
    if (!step) return run;
    run.states.push_back(cur);
    run.sacred_before.push_back(s);
    if (const auto* svr = std::get_if<SingletonVertexRemoval>(&*step)) {
      if (svr->host == s) s.discard(svr->vertex);
    } else if (const auto* lin = std::get_if<Linearization>(&*step)) {
      if (s.contains(lin->removed)) s.discard(lin->removed);
    }
    cur = apply_step(cur, *step);
    run.steps.push_back(std::move(*step));
  }
  run.complete = true;
  return run;
}

struct LocalTree {
  std::vector<Edge> labels;
  std::vector<std::size_t> parent;
  std::map<Edge, std::size_t> node_of;

  std::size_t at(const Edge& e) const {
    auto it = node_of.find(e);
    if (it == node_of.end())
      throw InternalInconsistencyError("replay refers to an edge with no node");
    return it->second;
  }
  std::size_t add(const Edge& label, std::size_t par) {
    labels.push_back(label);
    parent.push_back(par);
    node_of[label] = labels.size() - 1;
    return labels.size() - 1;
  }
};

// Backward replay of a completed run over one connected component.  Keeps the
// tree rooted at the sacred remnant throughout; every insertion point below is
// chosen so that both the join property and branch disjointness survive.
LocalTree rebuild_rooted(const BiasedRun& run) {
  LocalTree t;
  for (std::size_t k = run.steps.size(); k-- > 0;) {
    const auto& step = run.steps[k];
    const Hypergraph& pre = run.states[k];
    const Edge& s_pre = run.sacred_before[k];
    if (const auto* svr = std::get_if<SingletonVertexRemoval>(&step)) {
      Edge rem = svr->host;
      rem.discard(svr->vertex);
      if (rem.empty()) {
        if (!t.labels.empty())
          throw InternalInconsistencyError(
              "an edge of a connected component emptied early");
        t.add(svr->host, npos);
      } else if (pre.contains_edge(rem)) {
        std::size_t g = t.at(rem);
        if (s_pre.contains(svr->vertex)) {
          // the remnant shrank onto an existing edge; the restored edge is
          // sacred and goes above the current root
          if (svr->host != s_pre || t.parent[g] != npos)
            throw InternalInconsistencyError("sacred remnant left the root");
          std::size_t nn = t.add(svr->host, npos);
          t.parent[g] = nn;
        } else if (t.parent[g] == npos) {
          // a non-sacred edge collapsed onto the root label; keep the root in
          // place and let the restored edge adopt its children
          std::size_t nn = t.add(svr->host, g);
          for (std::size_t v = 0; v < nn; ++v)
            if (t.parent[v] == g) t.parent[v] = nn;
        } else {
          std::size_t p = t.parent[g];
          std::size_t nn = t.add(svr->host, p);
          t.parent[g] = nn;
        }
      } else {
        std::size_t g = t.at(rem);
        t.node_of.erase(rem);
        t.labels[g] = svr->host;
        t.node_of[svr->host] = g;
      }
    } else if (const auto* ser = std::get_if<SingletonEdgeRemoval>(&step)) {
      auto w = ser->edge.single();
      if (!w)
        throw InternalInconsistencyError("singleton-edge step on a larger edge");
      if (t.labels.empty()) {
        t.add(ser->edge, npos);
      } else {
        // nodes containing w form an ancestor chain (they pairwise intersect),
        // so the deepest one is the only join-preserving attachment point
        std::size_t best = npos, best_depth = 0;
        for (std::size_t v = 0; v < t.labels.size(); ++v) {
          if (!t.labels[v].contains(*w)) continue;
          std::size_t d = 0;
          for (std::size_t u = v; t.parent[u] != npos; u = t.parent[u]) ++d;
          if (best == npos || d > best_depth) {
            best = v;
            best_depth = d;
          }
        }
        if (best == npos)
          throw InternalInconsistencyError(
              "restored singleton edge shares no vertex with its component");
        t.add(ser->edge, best);
      }
    } else if (const auto* lin = std::get_if<Linearization>(&step)) {
      std::vector<std::size_t> affected;
      for (std::size_t v = 0; v < t.labels.size(); ++v)
        if (t.labels[v].contains(lin->kept)) affected.push_back(v);
      for (std::size_t v : affected) t.node_of.erase(t.labels[v]);
      for (std::size_t v : affected) {
        t.labels[v].add(lin->removed);
        t.node_of[t.labels[v]] = v;
      }
    } else {
      throw InternalInconsistencyError("included-edge removal inside a DM trace");
    }
  }
  return t;
}

}  // namespace

std::optional<JoinTree> build_disjoint_branch_join_tree(const Hypergraph& h,
                                                        const Edge& root) {
  if (!h.contains_edge(root))
    throw EdgeNotInHypergraphError("root " + edge_name(*h.table(), root) +
                                   " is not an edge of the hypergraph");

  const auto& es = h.edges();
  std::vector<std::size_t> comp(es.size(), npos);
  std::size_t ncomp = 0;
  for (std::size_t i = 0; i < es.size(); ++i) {
    if (comp[i] != npos) continue;
    std::vector<std::size_t> stack{i};
    comp[i] = ncomp;
    while (!stack.empty()) {
      std::size_t v = stack.back();
      stack.pop_back();
      for (std::size_t w = 0; w < es.size(); ++w)
        if (comp[w] == npos && es[v].intersects(es[w])) {
          comp[w] = ncomp;
          stack.push_back(w);
        }
    }
    ++ncomp;
  }

  JoinTree t;
  t.table = h.table();
  for (std::size_t c = 0; c < ncomp; ++c) {
    std::vector<Edge> ces;
    for (std::size_t i = 0; i < es.size(); ++i)
      if (comp[i] == c) ces.push_back(es[i]);
    bool has_root = std::find(ces.begin(), ces.end(), root) != ces.end();
    Edge sacred = has_root ? root : *smallest_edge(*h.table(), ces);

    BiasedRun run = run_biased(Hypergraph(h.table(), ces), sacred);
    if (!run.complete) return std::nullopt;
    LocalTree lt = rebuild_rooted(run);

    std::size_t lroot = npos, roots = 0;
    for (std::size_t v = 0; v < lt.parent.size(); ++v)
      if (lt.parent[v] == npos) {
        lroot = v;
        ++roots;
      }
    if (roots != 1 || lt.labels[lroot] != sacred)
      throw InternalInconsistencyError("rebuilt tree lost its designated root");

    std::size_t off = t.labels.size();
    for (std::size_t v = 0; v < lt.labels.size(); ++v) {
      t.labels.push_back(lt.labels[v]);
      t.parent.push_back(lt.parent[v] == npos ? npos : lt.parent[v] + off);
      if (lt.parent[v] != npos)
        t.tree_edges.emplace_back(v + off, lt.parent[v] + off);
    }
    if (has_root) t.root = off + lroot;
  }

  std::vector<Edge> sorted = t.labels;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != h.edges() || !t.root || !verify_join_property(t) ||
      !verify_disjoint_branches(t))
    throw InternalInconsistencyError(
        "constructed disjoint-branch join tree fails verification");
  return t;
}

std::string to_dot(const JoinTree& t) {
  std::ostringstream out;
  out << "graph jointree {\n";
  for (std::size_t i = 0; i < t.labels.size(); ++i)
    out << "  n" << i << " [label=\"" << edge_name(*t.table, t.labels[i])
        << "\"];\n";
  for (const auto& [a, b] : t.tree_edges)
    out << "  n" << a << " -- n" << b << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace hyperacyc
