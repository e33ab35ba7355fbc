#pragma once

#include <cstdio>
#include <string>
#include <string_view>

#include "hyperacyc/parse.hpp"

namespace fixtures {

using hyperacyc::Edge;
using hyperacyc::Hypergraph;
using hyperacyc::VertexIndex;
using hyperacyc::hg;

// The six reference hypergraphs used throughout: each is the smallest example
// separating one acyclicity notion from the next.
inline Hypergraph berge_triangle() { return hg("x y\nx y z\n"); }
inline Hypergraph gamma_triangle() { return hg("x y\ny z\nx y z\n"); }
inline Hypergraph beta_triangle() { return hg("x y\ny z\nx z\nx y z\n"); }
inline Hypergraph tetraedron() { return hg("x y z\nx y t\nx z t\ny z t\n"); }
inline Hypergraph square() { return hg("x y\ny z\nz t\nx t\n"); }
inline Hypergraph triangle() { return hg("x y\ny z\nx z\n"); }

// Worked transform example: two vertex pairs share stars ({t,u} and {y,z}),
// and the dual has seven edges.
inline Hypergraph running_example() {
  return hg("r\nr s\ns t u v w\nt u\nv\nx v w\nv w y z\n");
}

// Shrinking / contraction counterexample family.
inline Hypergraph nested_h1() { return hg("x a b c\ny a b c\nz a b c\n"); }
inline Hypergraph nested_h4() {
  return hg("x1 x2 y1 y2 z1 z2\nx1 x2\ny1 y2\nz1 z2\n");
}
inline Hypergraph nested_h5() { return hg("x1 y1 z1\nx1 y1\ny1 z1\nx1 z1\n"); }
inline Hypergraph nested_h6() { return hg("x1 y1\ny1 z1\nx1 z1\n"); }

// All intervals [i..j] over n linearly ordered vertices; n(n+1)/2 edges.
inline Hypergraph interval_chain(int n) {
  std::string text;
  char buf[8];
  for (int i = 1; i <= n; ++i) {
    for (int j = i; j <= n; ++j) {
      for (int k = i; k <= j; ++k) {
        std::snprintf(buf, sizeof buf, "x%02d", k);
        if (k > i) text += ' ';
        text += buf;
      }
      text += '\n';
    }
  }
  return hg(text);
}

inline VertexIndex V(const Hypergraph& h, std::string_view token) {
  return h.table()->require(token);
}

inline Edge E(const Hypergraph& h, std::string_view tokens) {
  Edge e(h.table()->size());
  std::string cur;
  auto flush = [&] {
    if (!cur.empty()) e.add(h.table()->require(cur));
    cur.clear();
  };
  for (char c : tokens) {
    if (c == ' ' || c == ',')
      flush();
    else
      cur += c;
  }
  flush();
  return e;
}

}  // namespace fixtures
