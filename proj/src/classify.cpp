#include "hyperacyc/classify.hpp"

#include <algorithm>
#include <cassert>

#include "hyperacyc/oracle.hpp"
#ifndef NDEBUG
#include "hyperacyc/reduce.hpp"
#endif

namespace hyperacyc {

namespace {

constexpr std::size_t kCycleWitnessMaxVertices = 12;
constexpr std::size_t kBetaWitnessMaxEdges = 12;

bool neighbours(const Hypergraph& h, VertexIndex a, VertexIndex b) {
  for (const auto& e : h.edges())
    if (e.contains(a) && e.contains(b)) return true;
  return false;
}

// Bron-Kerbosch with pivoting over the co-occurrence graph.
void maximal_cliques(const std::vector<VertexIndex>& verts,
                     const std::vector<VertexSet>& adj, VertexSet r, VertexSet p,
                     VertexSet x, std::vector<VertexSet>& out) {
  if (p.empty() && x.empty()) {
    out.push_back(r);
    return;
  }
  VertexSet pux = p | x;
  VertexIndex pivot = pux.members().front();
  std::size_t best = 0;
  for (VertexIndex u : pux.members()) {
    std::size_t deg = (p & adj[u]).count();
    if (deg >= best) { best = deg; pivot = u; }
  }
  for (VertexIndex v : (p - adj[pivot]).members()) {
    VertexSet rv = r;
    rv.add(v);
    maximal_cliques(verts, adj, rv, p & adj[v], x & adj[v], out);
    p.discard(v);
    x.add(v);
  }
}

bool covered(const Hypergraph& h, const VertexSet& s) {
  for (const auto& e : h.edges())
    if (s.subset_of(e)) return true;
  return false;
}

}  // namespace

bool is_cycle_free(const Hypergraph& h) {
  return elimination_order(h, LeafKind::Pure).has_value();
}

bool is_alpha_acyclic(const Hypergraph& h) {
  bool res = elimination_order(h, LeafKind::Alpha).has_value();
#ifndef NDEBUG
  assert(res == gyo_reduce(h).residual.empty());
#endif
  return res;
}

bool is_beta_acyclic(const Hypergraph& h) {
  return elimination_order(h, LeafKind::Beta).has_value();
}

bool is_gamma_acyclic(const Hypergraph& h) {
  bool res = elimination_order(h, LeafKind::Gamma).has_value();
#ifndef NDEBUG
  assert(res == dm_reduce(h).residual.empty());
#endif
  return res;
}

std::optional<NonConformalClique> conformal_violation(const Hypergraph& h) {
  auto verts = h.vertex_universe().members();
  const std::size_t u = h.table()->size();
  std::vector<VertexSet> adj(u, VertexSet(u));
  for (const auto& e : h.edges())
    for (VertexIndex a : e.members()) adj[a] = adj[a] | e;
  for (VertexIndex v : verts) adj[v].discard(v);

  VertexSet p(u);
  for (VertexIndex v : verts) p.add(v);
  std::vector<VertexSet> cliques;
  if (!verts.empty())
    maximal_cliques(verts, adj, VertexSet(u), p, VertexSet(u), cliques);

  for (const auto& k : cliques) {
    if (covered(h, k)) continue;
    // Shrink to a minimal uncovered clique; pairs are always covered, so the
    // result has at least three members.
    VertexSet cur = k;
    bool shrunk = true;
    while (shrunk) {
      shrunk = false;
      for (VertexIndex v : cur.members()) {
        VertexSet cand = cur;
        cand.discard(v);
        if (!covered(h, cand)) { cur = cand; shrunk = true; break; }
      }
    }
    return NonConformalClique{cur};
  }
  return std::nullopt;
}

bool is_conformal(const Hypergraph& h) { return !conformal_violation(h).has_value(); }

std::optional<IncidenceCycle> berge_violation(const Hypergraph& h) {
  // Incidence graph nodes: vertices then edges.
  auto verts = h.vertex_universe().members();
  const std::size_t nv = verts.size(), ne = h.edge_count(), n = nv + ne;
  std::vector<std::size_t> vpos(h.table()->size());
  for (std::size_t i = 0; i < nv; ++i) vpos[verts[i]] = i;
  std::vector<std::vector<std::size_t>> adj(n);
  for (std::size_t ei = 0; ei < ne; ++ei) {
    for (VertexIndex v : h.edges()[ei].members()) {
      adj[vpos[v]].push_back(nv + ei);
      adj[nv + ei].push_back(vpos[v]);
    }
  }
  std::vector<bool> alive(n, true);
  std::vector<std::size_t> degree(n);
  std::vector<std::size_t> queue;
  for (std::size_t i = 0; i < n; ++i) {
    degree[i] = adj[i].size();
    if (degree[i] <= 1) queue.push_back(i);
  }
  while (!queue.empty()) {
    std::size_t i = queue.back();
    queue.pop_back();
    if (!alive[i]) continue;
    alive[i] = false;
    for (std::size_t j : adj[i])
      if (alive[j] && --degree[j] <= 1) queue.push_back(j);
  }
  std::size_t start = n;
  for (std::size_t i = 0; i < n; ++i)
    if (alive[i]) { start = i; break; }
  if (start == n) return std::nullopt;

  // Every surviving node keeps degree >= 2 among survivors; walk forward until
  // a node repeats, then cut out the cycle.
  std::vector<std::size_t> path;
  std::vector<std::size_t> at(n, n);
  std::size_t prev = n, cur = start;
  while (at[cur] == n) {
    at[cur] = path.size();
    path.push_back(cur);
    std::size_t nxt = n;
    for (std::size_t j : adj[cur])
      if (alive[j] && j != prev) { nxt = j; break; }
    prev = cur;
    cur = nxt;
  }
  std::vector<std::size_t> cycle(path.begin() + at[cur], path.end());
  if (cycle.front() >= nv)  // rotate so the cycle starts on a vertex node
    std::rotate(cycle.begin(), cycle.begin() + 1, cycle.end());
  IncidenceCycle out;
  for (std::size_t i = 0; i < cycle.size(); i += 2) {
    out.vertices.push_back(verts[cycle[i]]);
    out.edges.push_back(h.edges()[cycle[i + 1] - nv]);
  }
  return out;
}

bool is_berge_acyclic(const Hypergraph& h) { return !berge_violation(h).has_value(); }

std::optional<GammaTriangle> find_gamma_triangle(const Hypergraph& h) {
  auto verts = h.vertex_universe().members();
  std::sort(verts.begin(), verts.end(), [&](VertexIndex a, VertexIndex b) {
    return h.table()->rank(a) < h.table()->rank(b);
  });
  const std::size_t u = h.table()->size();
  for (std::size_t i = 0; i < verts.size(); ++i) {
    for (std::size_t j = i + 1; j < verts.size(); ++j) {
      for (std::size_t l = j + 1; l < verts.size(); ++l) {
        VertexSet t(u, {verts[i], verts[j], verts[l]});
        auto ind = h.induced(t);
        if (!ind.contains_edge(t)) continue;
        for (VertexIndex c : {verts[i], verts[j], verts[l]}) {
          auto rest = (t - VertexSet(u, {c})).members();
          if (ind.contains_edge(Edge(u, {c, rest[0]})) &&
              ind.contains_edge(Edge(u, {c, rest[1]})))
            return GammaTriangle{c, rest[0], rest[1]};
        }
      }
    }
  }
  return std::nullopt;
}

AcyclicityReport classify(const Hypergraph& h) {
  AcyclicityReport r;

  auto pure = elimination_order(h, LeafKind::Pure);
  r.cycle_free = pure.has_value();
  if (pure) r.orders_used.push_back(std::move(*pure));
  else if (h.vertex_universe().count() <= kCycleWitnessMaxVertices)
    r.cycle_witness = has_cycle_brute(h);

  r.non_conformal_clique = conformal_violation(h);
  r.conformal = !r.non_conformal_clique.has_value();

  auto alpha = elimination_order(h, LeafKind::Alpha);
  r.alpha = alpha.has_value();
  if (alpha) r.orders_used.push_back(std::move(*alpha));

  auto beta = elimination_order(h, LeafKind::Beta);
  r.beta = beta.has_value();
  if (beta) r.orders_used.push_back(std::move(*beta));
  else if (h.edge_count() <= kBetaWitnessMaxEdges)
    r.beta_cycle = beta_violation_brute(h);

  auto gamma = elimination_order(h, LeafKind::Gamma);
  r.gamma = gamma.has_value();
  if (gamma) r.orders_used.push_back(std::move(*gamma));
  else if (r.cycle_free) r.gamma_triangle = find_gamma_triangle(h);

  r.berge_cycle = berge_violation(h);
  r.berge = !r.berge_cycle.has_value();

  auto fail = [](const char* what) { throw InternalInconsistencyError(what); };
  if (r.gamma && !r.beta) fail("gamma without beta");
  if (r.beta && !r.alpha) fail("beta without alpha");
  if (r.alpha && !r.cycle_free) fail("alpha without cycle-freedom");
  if (r.berge && !r.gamma) fail("berge acyclicity without gamma");
  if (r.alpha != (r.conformal && r.cycle_free))
    fail("alpha disagrees with conformal plus cycle-free");
  if (!r.gamma && r.cycle_free && !r.gamma_triangle)
    fail("non-gamma cycle-free input without a triangle witness");

  if (r.cycle_witness && !verify_witness(h, *r.cycle_witness)) fail("bad cycle witness");
  if (r.non_conformal_clique && !verify_witness(h, *r.non_conformal_clique))
    fail("bad clique witness");
  if (r.gamma_triangle && !verify_witness(h, *r.gamma_triangle))
    fail("bad triangle witness");
  if (r.berge_cycle && !verify_witness(h, *r.berge_cycle)) fail("bad incidence witness");
  if (r.beta_cycle && !verify_witness(h, *r.beta_cycle)) fail("bad beta cycle witness");
  for (const auto& eo : r.orders_used)
    if (!verify_elimination_order(h, eo)) fail("bad elimination order");

  return r;
}

}  // namespace hyperacyc
