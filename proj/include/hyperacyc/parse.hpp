#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hyperacyc/hypergraph.hpp"

namespace hyperacyc {

// File format: one edge per line, whitespace-separated vertex tokens, '#'
// starts a comment, blank lines skipped.  Duplicate edges collapse with a
// warning.  Vertices are interned in first-appearance order.
BuildResult parse_hypergraph(std::string_view text);

// Canonical text: vertices sorted by token within an edge, edges sorted
// lexicographically by their token lists, one edge per line.
std::string render_hypergraph(const Hypergraph& h);

// Test/demo convenience: parse, discarding warnings.
Hypergraph hg(std::string_view text);

}  // namespace hyperacyc
