#include "doctest.h"

#include "fixtures.hpp"
#include "hyperacyc/errors.hpp"
#include "hyperacyc/hypergraph.hpp"
#include "hyperacyc/parse.hpp"

using namespace hyperacyc;
using fixtures::E;
using fixtures::V;

TEST_CASE("vertices intern in first-appearance order and edges deduplicate") {
  auto br = make_hypergraph({{"b", "a"}, {"a", "b"}, {"c"}});
  CHECK(br.hypergraph.edge_count() == 2);
  CHECK(br.warnings.size() == 1);
  CHECK(br.warnings.front().find("duplicate") != std::string::npos);
  CHECK(br.hypergraph.table()->token(0) == "b");
  CHECK(br.hypergraph.table()->token(1) == "a");
  CHECK(br.hypergraph.table()->token(2) == "c");
}

TEST_CASE("empty hypergraph basics") {
  Hypergraph h;
  CHECK(h.empty());
  CHECK(h.edge_count() == 0);
  CHECK(h.size() == 0);
  CHECK(h.vertex_universe().empty());
  CHECK(render_hypergraph(h).empty());
}

TEST_CASE("vertex universe is the union of the edges") {
  auto h = fixtures::running_example();
  CHECK(h.vertex_universe().count() == 9);
  auto g = h.without_vertex(V(h, "x"));
  CHECK(g.vertex_universe().count() == 8);
  CHECK(g.contains_edge(E(h, "v w")));  // {x,v,w} lost x
}

TEST_CASE("induced restriction drops empty traces") {
  auto h = fixtures::gamma_triangle();
  auto g = h.induced(E(h, "x y"));
  CHECK(g.edge_count() == 2);
  CHECK(g.contains_edge(E(h, "x y")));
  CHECK(g.contains_edge(E(h, "y")));
  CHECK(h.induced(Edge(h.table()->size())).empty());
}

TEST_CASE("star and neighbourhood") {
  auto h = fixtures::gamma_triangle();
  CHECK(h.star(V(h, "y")).size() == 3);
  CHECK(h.star(V(h, "x")).size() == 2);

  auto sq = fixtures::square();
  CHECK(sq.neighbourhood(V(sq, "x")) == E(sq, "x y t"));
  CHECK_THROWS_AS(sq.neighbourhood(99), UnknownVertexError);
}

TEST_CASE("minimize keeps inclusion-maximal edges") {
  CHECK(render_hypergraph(fixtures::beta_triangle().minimize()) == "x y z\n");
  auto h = fixtures::square();
  CHECK(h.minimize() == h);
}

TEST_CASE("incomparable overlapping edges are intersecting") {
  auto h = fixtures::running_example();
  CHECK(intersecting(E(h, "t u"), E(h, "s t u v w")) == false);  // nested
  CHECK(intersecting(E(h, "x v w"), E(h, "v w y z")) == true);
  CHECK(intersecting(E(h, "r"), E(h, "t u")) == false);  // disjoint
  CHECK(intersecting(E(h, "r s"), E(h, "s t u v w")) == true);
}

TEST_CASE("dual of the running example") {
  auto h = fixtures::running_example();
  auto d = dual(h);
  CHECK(d.dual.table()->size() == 7);  // one dual vertex per edge
  CHECK(d.dual.edge_count() == 7);     // seven distinct stars
  CHECK(render_hypergraph(d.dual) ==
        "r r+s\n"
        "r+s s+t+u+v+w\n"
        "s+t+u+v+w t+u\n"
        "s+t+u+v+w v v+w+x v+w+y+z\n"
        "s+t+u+v+w v+w+x v+w+y+z\n"
        "v+w+x\n"
        "v+w+y+z\n");
  // vertex_to_edge maps each dual vertex back to its source edge
  for (std::size_t i = 0; i < d.vertex_to_edge.size(); ++i)
    CHECK(h.contains_edge(d.vertex_to_edge[i]));
}

TEST_CASE("normalize merges exactly the same-star vertex classes") {
  auto h = fixtures::running_example();
  CHECK(render_hypergraph(h.normalize()) ==
        "r\n"
        "r s\n"
        "s t v w\n"
        "t\n"
        "v\n"
        "v w x\n"
        "v w y\n");
  // already-normalized inputs are fixed points
  auto sq = fixtures::square();
  CHECK(sq.normalize() == sq);
}

TEST_CASE("dual of the empty hypergraph is empty") {
  CHECK(dual(Hypergraph{}).dual.empty());
}

TEST_CASE("vertex table validates tokens") {
  CHECK_THROWS_AS(VertexTable::validate_token(""), MalformedTokenError);
  CHECK_THROWS_AS(VertexTable::validate_token("a b"), MalformedTokenError);
  CHECK_THROWS_AS(VertexTable::validate_token("a#b"), MalformedTokenError);
  CHECK_THROWS_AS(VertexTable({"x", "x"}), MalformedTokenError);
  VertexTable t({"b", "a"});
  CHECK(t.require("a") == 1);
  CHECK_THROWS_AS(t.require("z"), UnknownVertexError);
  CHECK(t.nth_by_rank(0) == 1);  // "a" ranks first
}

TEST_CASE("edge naming and ordering helpers") {
  auto h = fixtures::gamma_triangle();
  CHECK(edge_name(*h.table(), E(h, "y x")) == "{x,y}");
  auto ordered = edges_by_token_order(h);
  CHECK(edge_name(*h.table(), ordered.front()) == "{x,y}");
  CHECK(edge_name(*h.table(), ordered.back()) == "{y,z}");
  CHECK(edge_tokens_less(*h.table(), E(h, "x y"), *h.table(), E(h, "x y z")));
  CHECK(!edge_tokens_less(*h.table(), E(h, "y z"), *h.table(), E(h, "x y z")));
}
