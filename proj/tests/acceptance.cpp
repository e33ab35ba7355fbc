// End-to-end gate: thirteen independent checks, one summary line each.
// Exits non-zero if any check fails.

#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "hyperacyc/classify.hpp"
#include "hyperacyc/iso.hpp"
#include "hyperacyc/jointree.hpp"
#include "hyperacyc/leaves.hpp"
#include "hyperacyc/minors.hpp"
#include "hyperacyc/oracle.hpp"
#include "hyperacyc/parse.hpp"
#include "hyperacyc/reduce.hpp"

using namespace hyperacyc;

namespace {

struct Context {
  std::string detail;  // first failure description, empty while passing
  void fail(std::string d) {
    if (detail.empty()) detail = std::move(d);
  }
  void require(bool ok, const std::string& d) {
    if (!ok) fail(d);
  }
};

std::string brief(const Hypergraph& h) {
  std::string out;
  for (const auto& e : h.edges()) {
    if (!out.empty()) out += ' ';
    out += edge_name(*h.table(), e);
  }
  return out.empty() ? "(empty)" : out;
}

// --- 1: the six reference shapes ------------------------------------------

void six_fixtures(Context& c) {
  struct Row {
    const char* text;
    bool gamma, beta, alpha, cycle_free, conformal, berge;
  };
  const Row rows[] = {
      {"x y\nx y z\n", true, true, true, true, true, false},
      {"x y\ny z\nx y z\n", false, true, true, true, true, false},
      {"x y\ny z\nx z\nx y z\n", false, false, true, true, true, false},
      {"x y z\nx y t\nx z t\ny z t\n", false, false, false, true, false, false},
      {"x y\ny z\nz t\nx t\n", false, false, false, false, true, false},
      {"x y\ny z\nx z\n", false, false, false, false, false, false},
  };
  for (const auto& row : rows) {
    auto h = hg(row.text);
    auto r = classify(h);
    bool ok = r.gamma == row.gamma && r.beta == row.beta && r.alpha == row.alpha &&
              r.cycle_free == row.cycle_free && r.conformal == row.conformal &&
              r.berge == row.berge;
    c.require(ok, "wrong report for " + brief(h));
  }
}

// --- 2: the worked dual and normalization ---------------------------------

void dual_and_normalize(Context& c) {
  auto h = hg("r\nr s\ns t u v w\nt u\nv\nx v w\nv w y z\n");
  auto d = dual(h).dual;
  // One vertex per edge (e1..e7 in the order above), one edge per distinct
  // star, transcribed from the reference drawing.
  auto expected = hg(
      "e1 e2\n"
      "e2 e3\n"
      "e3 e4\n"
      "e3 e5 e6 e7\n"
      "e3 e6 e7\n"
      "e6\n"
      "e7\n");
  c.require(d.edge_count() == 7, "dual has " + std::to_string(d.edge_count()) +
                                     " edges instead of 7");
  c.require(isomorphic(d, expected), "dual does not match the drawn dual");

  auto n = h.normalize();
  c.require(render_hypergraph(n) == "r\nr s\ns t v w\nt\nv\nv w x\nv w y\n",
            "normalization differs from the expected merge of {t,u} and {y,z}");
  auto un = n.vertex_universe();
  c.require(!un.contains(h.table()->require("u")) &&
                !un.contains(h.table()->require("z")) &&
                un.count() == 7,
            "normalization merged the wrong vertex classes");
}

// --- 3: elimination orders against the oracle, three vertices -------------

void elimination_vs_oracle(Context& c) {
  CensusStream census(3);
  while (auto oh = census.next()) {
    const Hypergraph& h = *oh;
    bool alpha = elimination_order(h, LeafKind::Alpha).has_value();
    bool beta = elimination_order(h, LeafKind::Beta).has_value();
    bool gamma = elimination_order(h, LeafKind::Gamma).has_value();
    if (alpha != is_alpha_brute(h) || beta != is_beta_brute(h) ||
        gamma != is_gamma_brute(h))
      c.fail("order existence disagrees with the oracle on " + brief(h));
  }
}

// --- 4: classifier, reducers and pure orders at four vertices -------------

void four_vertex_census(Context& c) {
  CensusStream census(4);
  while (auto oh = census.next()) {
    const Hypergraph& h = *oh;
    bool cf = is_cycle_free_brute(h);
    bool alpha = is_alpha_brute(h);
    bool gamma = is_gamma_brute(h);
    if (is_cycle_free(h) != cf || is_alpha_acyclic(h) != alpha ||
        is_gamma_acyclic(h) != gamma) {
      c.fail("classifier disagrees with the oracle on " + brief(h));
      return;
    }
    if (gyo_reduce(h).residual.empty() != alpha) {
      c.fail("GYO emptiness differs from alpha on " + brief(h));
      return;
    }
    if (dm_reduce(h).residual.empty() != gamma) {
      c.fail("DM emptiness differs from gamma on " + brief(h));
      return;
    }
    if (elimination_order(h, LeafKind::Pure).has_value() != cf) {
      c.fail("pure order existence differs from cycle-freedom on " + brief(h));
      return;
    }
  }
}

// --- 5: beta classifier against the subset brute force --------------------

void beta_census(Context& c) {
  CensusStream census(4, 8);
  while (auto oh = census.next()) {
    if (is_beta_acyclic(*oh) != is_beta_brute(*oh)) {
      c.fail("beta disagreement on " + brief(*oh));
      return;
    }
  }
  CensusStream wide(5);
  std::mt19937 rng(0x5eed5);
  for (int i = 0; i < 5000; ++i) {
    Hypergraph h = random_member(rng, wide.table(), 10);
    if (is_beta_acyclic(h) != is_beta_brute(h)) {
      c.fail("beta disagreement on sampled " + brief(h));
      return;
    }
  }
}

// --- 6: two non-neighbouring leaves under each theorem's hypotheses -------

bool neighbours_in(const Hypergraph& h, VertexIndex x, VertexIndex y) {
  for (const auto& e : h.edges())
    if (e.contains(x) && e.contains(y)) return true;
  return false;
}

bool has_far_pair(const Hypergraph& scene, const std::vector<VertexIndex>& leaves) {
  for (std::size_t i = 0; i < leaves.size(); ++i)
    for (std::size_t j = i + 1; j < leaves.size(); ++j)
      if (!neighbours_in(scene, leaves[i], leaves[j])) return true;
  return false;
}

void leaf_pair_theorems(Context& c) {
  CensusStream census(4);
  while (auto oh = census.next()) {
    const Hypergraph& h = *oh;
    if (h.empty()) continue;
    VertexSet universe = h.vertex_universe();
    Hypergraph trimmed = h.contains_edge(universe) ? h.without_edge(universe) : h;

    if (is_alpha_brute(h) && !h.contains_edge(universe) &&
        !has_far_pair(h, leaves_of(h, LeafKind::Alpha)))
      c.fail("no far alpha leaf pair in " + brief(h));
    if (universe.count() >= 2) {
      if (is_beta_brute(h) && !has_far_pair(trimmed, leaves_of(h, LeafKind::Beta)))
        c.fail("no far beta leaf pair in " + brief(h));
      if (is_gamma_brute(h) && !has_far_pair(trimmed, leaves_of(h, LeafKind::Gamma)))
        c.fail("no far gamma leaf pair in " + brief(h));
    }
  }
}

// --- 7: emptiability does not depend on which leaf goes first -------------

// Explores every leaf choice at every state; returns emptiability and fails
// the context if two sibling choices ever disagree.
bool emptiable_all_branches(Context& c, const Hypergraph& h, LeafKind kind) {
  if (h.empty()) return true;
  auto leaves = leaves_of(h, kind);
  if (leaves.empty()) return false;
  bool first = emptiable_all_branches(c, h.without_vertex(leaves.front()), kind);
  for (std::size_t i = 1; i < leaves.size(); ++i) {
    if (emptiable_all_branches(c, h.without_vertex(leaves[i]), kind) != first)
      c.fail("branch-dependent elimination from " + brief(h));
  }
  return first;
}

void confluence(Context& c) {
  CensusStream census(3);
  while (auto oh = census.next()) {
    for (LeafKind kind :
         {LeafKind::Alpha, LeafKind::Beta, LeafKind::Gamma, LeafKind::Pure}) {
      bool all = emptiable_all_branches(c, *oh, kind);
      if (all != elimination_order(*oh, kind).has_value())
        c.fail("greedy order disagrees with exhaustive branching on " + brief(*oh));
    }
  }
}

// --- 8: orders that keep one edge for last --------------------------------

void sacred_orders(Context& c) {
  CensusStream census(4);
  while (auto oh = census.next()) {
    const Hypergraph& h = *oh;
    for (LeafKind kind : {LeafKind::Alpha, LeafKind::Beta, LeafKind::Gamma}) {
      if (!elimination_order(h, kind).has_value()) continue;
      for (const auto& e : h.edges()) {
        auto eo = sacred_order(h, kind, e);
        if (!eo) {
          c.fail("missing sacred order on " + brief(h));
          return;
        }
        std::size_t outside = (h.vertex_universe() - e).count();
        bool ok = verify_elimination_order(h, *eo);
        for (std::size_t i = 0; ok && i < eo->order.size(); ++i)
          ok = e.contains(eo->order[i]) == (i >= outside);
        if (!ok) {
          c.fail("sacred order misplaces vertices on " + brief(h));
          return;
        }
      }
    }
  }
}

// --- 9: join trees at four vertices ---------------------------------------

void join_trees(Context& c) {
  CensusStream census(4);
  while (auto oh = census.next()) {
    const Hypergraph& h = *oh;
    auto t = build_join_tree(h);
    if (t.has_value() != is_alpha_brute(h)) {
      c.fail("plain tree existence differs from alpha on " + brief(h));
      return;
    }
    if (t && !verify_join_property(*t)) {
      c.fail("built tree fails the join property on " + brief(h));
      return;
    }
    bool gamma = is_gamma_brute(h);
    for (const auto& e : h.edges()) {
      auto d = build_disjoint_branch_join_tree(h, e);
      if (d.has_value() != gamma) {
        c.fail("rooted tree existence differs from gamma on " + brief(h));
        return;
      }
      if (d && (!verify_join_property(*d) || !verify_disjoint_branches(*d) ||
                d->labels[*d->root] != e)) {
        c.fail("rooted tree fails verification on " + brief(h));
        return;
      }
    }
  }
}

// --- 10: behaviour under dualization --------------------------------------

void dual_invariance(Context& c) {
  CensusStream census(4);
  while (auto oh = census.next()) {
    Hypergraph d = dual(*oh).dual;
    if (is_beta_acyclic(*oh) != is_beta_acyclic(d) ||
        is_gamma_acyclic(*oh) != is_gamma_acyclic(d)) {
      c.fail("beta/gamma not dual-invariant on " + brief(*oh));
      return;
    }
  }
  auto a = hg("x y\ny z\nx z\nx y z\n");
  auto b = hg("e g h\ne f h\nf g h\n");
  c.require(is_alpha_acyclic(a), "covered triangle should be alpha acyclic");
  c.require(!is_cycle_free(b), "its dual partner should carry a cycle");
}

// --- 11: closure under contraction and edge removal -----------------------

void closure(Context& c) {
  CensusStream census(4);
  while (auto oh = census.next()) {
    const Hypergraph& h = *oh;
    bool alpha = is_alpha_acyclic(h);
    bool cf = is_cycle_free(h);
    bool beta = is_beta_acyclic(h);
    bool gamma = is_gamma_acyclic(h);
    if (alpha || cf) {
      for (VertexIndex x : h.vertex_universe().members()) {
        for (VertexIndex y : h.neighbourhood(x).members()) {
          if (x == y) continue;
          Hypergraph k = contract_edge(h, x, y);
          if (alpha && !is_alpha_acyclic(k))
            c.fail("contraction broke alpha on " + brief(h));
          if (cf && !is_cycle_free(k))
            c.fail("contraction broke cycle-freedom on " + brief(h));
        }
      }
    }
    if (beta || gamma) {
      for (const auto& e : h.edges()) {
        Hypergraph k = h.without_edge(e);
        if (beta && !is_beta_acyclic(k)) c.fail("edge removal broke beta on " + brief(h));
        if (gamma && !is_gamma_acyclic(k))
          c.fail("edge removal broke gamma on " + brief(h));
      }
    }
    if (!c.detail.empty()) return;
  }

  // The worked family behind the closure proofs.
  auto h1 = hg("x a b c\ny a b c\nz a b c\n");
  c.require(is_alpha_acyclic(h1), "shared-core family member should be alpha");
  auto table = h1.table();
  auto edge_of = [&](const char* a, const char* b) {
    return Edge(table->size(), {table->require(a), table->require(b)});
  };
  auto find_edge = [&](const Hypergraph& g, const char* tok) {
    for (const auto& e : g.edges())
      if (e.contains(table->require(tok))) return e;
    return Edge(table->size());
  };
  Hypergraph s = shrink_edge(h1, find_edge(h1, "x"), edge_of("a", "b"));
  s = shrink_edge(s, find_edge(s, "y"), edge_of("b", "c"));
  s = shrink_edge(s, find_edge(s, "z"), edge_of("a", "c"));
  c.require(isomorphic(s, hg("x y\ny z\nx z\n")),
            "shrink chain should end at the triangle");
  c.require(!is_cycle_free(s), "shrunk family member should carry a cycle");

  auto h4 = hg("x1 x2 y1 y2 z1 z2\nx1 x2\ny1 y2\nz1 z2\n");
  c.require(is_gamma_acyclic(h4), "paired family member should be gamma");
  auto t4 = h4.table();
  Hypergraph k = contract_edge(h4, t4->require("x2"), t4->require("y1"));
  k = contract_edge(k, t4->require("y2"), t4->require("z1"));
  k = contract_edge(k, t4->require("z2"), t4->require("x1"));
  auto h5 = hg("x1 y1 z1\nx1 y1\ny1 z1\nx1 z1\n");
  c.require(isomorphic(k, h5), "contraction chain should end at the covered triangle");
  c.require(is_alpha_acyclic(h5) && !is_beta_acyclic(h5),
            "covered triangle should be alpha but not beta");
  auto h6 = h5.without_edge(h5.edges().back());
  c.require(!is_cycle_free(h6), "uncovered triangle should carry a cycle");
}

// --- 12: the interval chain edge count ------------------------------------

void interval_bound(Context& c) {
  std::vector<std::vector<std::string>> edges;
  for (int i = 1; i <= 10; ++i) {
    for (int j = i; j <= 10; ++j) {
      std::vector<std::string> e;
      for (int k = i; k <= j; ++k) {
        char buf[16];
        std::snprintf(buf, sizeof buf, "x%02d", k);
        e.push_back(buf);
      }
      edges.push_back(std::move(e));
    }
  }
  Hypergraph h = make_hypergraph(edges).hypergraph;
  c.require(h.edge_count() == 55, "interval hypergraph should have 55 edges");
  c.require(is_beta_acyclic(h), "interval hypergraph should be beta acyclic");
}

// --- 13: expansion to a gamma-acyclic cover -------------------------------

void expansion(Context& c) {
  CensusStream census(4);
  while (auto oh = census.next()) {
    const Hypergraph& h = *oh;
    if (!is_alpha_brute(h)) continue;
    GammaExpansion g = gamma_expansion(h);
    if (!is_gamma_acyclic(g.expanded)) {
      c.fail("expansion is not gamma acyclic for " + brief(h));
      return;
    }
    Hypergraph back = g.expanded;
    for (const auto& [removed, kept] : g.plan)
      back = contract_edge(back, removed, kept);
    if (!isomorphic(back, h)) {
      c.fail("plan replay does not recover " + brief(h));
      return;
    }
  }
}

}  // namespace

int main() {
  struct Criterion {
    const char* label;
    std::function<void(Context&)> run;
  };
  const std::vector<Criterion> criteria = {
      {"six reference shapes classify exactly", six_fixtures},
      {"worked dual and normalization", dual_and_normalize},
      {"elimination orders match the oracle (3 vertices)", elimination_vs_oracle},
      {"classifier, reducers, pure orders (4 vertices)", four_vertex_census},
      {"beta classifier vs subset brute force", beta_census},
      {"two non-neighbouring leaves exist", leaf_pair_theorems},
      {"emptiability is leaf-choice independent", confluence},
      {"orders keeping one edge for last", sacred_orders},
      {"join tree builders (4 vertices)", join_trees},
      {"beta/gamma stable under dualization", dual_invariance},
      {"closure under contraction and edge removal", closure},
      {"interval chain edge bound", interval_bound},
      {"expansion to gamma-acyclic covers", expansion},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Context c;
    criteria[i].run(c);
    if (c.detail.empty()) {
      std::printf("criterion %zu: pass - %s\n", i + 1, criteria[i].label);
    } else {
      ++failures;
      std::printf("criterion %zu: FAIL - %s: %s\n", i + 1, criteria[i].label,
                  c.detail.c_str());
    }
  }
  return failures == 0 ? 0 : 1;
}
