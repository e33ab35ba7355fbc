#include "doctest.h"

#include "fixtures.hpp"
#include "hyperacyc/classify.hpp"
#include "hyperacyc/errors.hpp"
#include "hyperacyc/iso.hpp"
#include "hyperacyc/minors.hpp"
#include "hyperacyc/parse.hpp"

using namespace hyperacyc;
using fixtures::E;
using fixtures::V;

namespace {

Hypergraph replay_plan(const GammaExpansion& g) {
  Hypergraph cur = g.expanded;
  for (const auto& [removed, kept] : g.plan)
    cur = contract_edge(cur, removed, kept);
  return cur;
}

}  // namespace

TEST_CASE("shrinking replaces one edge by a subset") {
  auto h = hg("x y\n");
  auto s = shrink_edge(h, E(h, "x y"), E(h, "x"));
  CHECK(render_hypergraph(s) == "x\n");

  auto h2 = hg("x y\nx\n");
  auto s2 = shrink_edge(h2, E(h2, "x y"), E(h2, "x"));
  CHECK(s2.edge_count() == 1);  // collapses onto the existing {x}

  CHECK_THROWS_AS(shrink_edge(h, E(h, "x"), E(h, "x")), EdgeNotInHypergraphError);
  CHECK_THROWS_AS(shrink_edge(h, E(h, "x y"), Edge(2)), InvalidSubsetError);
  CHECK_THROWS_AS(shrink_edge(h, E(h, "x y"), Edge(5, {0})), InvalidSubsetError);
  auto other = hg("x y z\n");
  CHECK_THROWS_AS(shrink_edge(other, E(other, "x y z"), Edge(3)), InvalidSubsetError);
}

TEST_CASE("contracting merges two co-occurring vertices") {
  auto h = hg("x y\n");
  CHECK(render_hypergraph(contract_edge(h, V(h, "x"), V(h, "y"))) == "y\n");

  auto sq = fixtures::square();
  auto c = contract_edge(sq, V(sq, "x"), V(sq, "y"));
  CHECK(render_hypergraph(c) == "t y\nt z\ny\ny z\n");

  CHECK_THROWS_AS(contract_edge(sq, V(sq, "x"), V(sq, "z")), NotNeighboursError);
  CHECK_THROWS_AS(contract_edge(sq, V(sq, "x"), V(sq, "x")), NotNeighboursError);
  CHECK_THROWS_AS(contract_edge(c, V(sq, "x"), V(sq, "y")), UnknownVertexError);
}

TEST_CASE("shrinking can break alpha acyclicity") {
  auto h = fixtures::nested_h1();  // three edges around a common core
  CHECK(is_alpha_acyclic(h));
  auto s = shrink_edge(h, E(h, "x a b c"), E(h, "a b"));
  s = shrink_edge(s, E(s, "y a b c"), E(s, "b c"));
  s = shrink_edge(s, E(s, "z a b c"), E(s, "a c"));
  CHECK(isomorphic(s, fixtures::triangle()));
  CHECK(!is_cycle_free(s));
}

TEST_CASE("contracting can break gamma acyclicity") {
  auto h = fixtures::nested_h4();
  CHECK(is_gamma_acyclic(h));
  auto c = contract_edge(h, V(h, "x2"), V(h, "y1"));
  c = contract_edge(c, V(h, "y2"), V(h, "z1"));
  c = contract_edge(c, V(h, "z2"), V(h, "x1"));
  CHECK(isomorphic(c, fixtures::nested_h5()));
  CHECK(is_alpha_acyclic(c));
  CHECK(!is_beta_acyclic(c));
}

TEST_CASE("edge removal keeps the hereditary grades") {
  auto h5 = fixtures::nested_h5();
  CHECK(is_alpha_acyclic(h5));
  auto h6 = h5.without_edge(E(h5, "x1 y1 z1"));
  CHECK(isomorphic(h6, fixtures::nested_h6()));
  CHECK(!is_cycle_free(h6));  // alpha is not hereditary

  auto gt = fixtures::gamma_triangle();
  CHECK(is_beta_acyclic(gt));
  for (const auto& e : gt.edges()) CHECK(is_beta_acyclic(gt.without_edge(e)));
  auto berge = fixtures::berge_triangle();
  CHECK(is_gamma_acyclic(berge));
  for (const auto& e : berge.edges()) CHECK(is_gamma_acyclic(berge.without_edge(e)));
}

TEST_CASE("gamma expansion of a single vertex") {
  auto h = hg("x\n");
  auto g = gamma_expansion(h);
  CHECK(g.plan.empty());
  CHECK(render_hypergraph(g.expanded) == "x@x~x\n");
  CHECK(isomorphic(replay_plan(g), h));
}

TEST_CASE("gamma expansion splits shared vertices across tree nodes") {
  auto bt = fixtures::beta_triangle();
  auto g = gamma_expansion(bt);
  CHECK(is_gamma_acyclic(g.expanded));
  CHECK(g.expanded.edge_count() == bt.edge_count());
  CHECK(isomorphic(replay_plan(g), bt));

  auto gt = fixtures::gamma_triangle();
  auto g2 = gamma_expansion(gt);
  CHECK(is_gamma_acyclic(g2.expanded));
  CHECK(isomorphic(replay_plan(g2), gt));

  auto run = fixtures::running_example();
  auto g3 = gamma_expansion(run);
  CHECK(is_gamma_acyclic(g3.expanded));
  CHECK(isomorphic(replay_plan(g3), run));
}

TEST_CASE("gamma expansion refuses cyclic inputs") {
  CHECK_THROWS_AS(gamma_expansion(fixtures::triangle()), NotAlphaAcyclicError);
  CHECK_THROWS_AS(gamma_expansion(fixtures::square()), NotAlphaAcyclicError);
}
