#include "hyperacyc/parse.hpp"

#include <sstream>

namespace hyperacyc {

BuildResult parse_hypergraph(std::string_view text) {
  std::vector<std::vector<std::string>> token_edges;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos ? eol : eol - pos);
    if (auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    std::vector<std::string> tokens;
    std::istringstream is{std::string(line)};
    std::string tok;
    while (is >> tok) tokens.push_back(tok);
    if (!tokens.empty()) token_edges.push_back(std::move(tokens));
    if (eol == std::string_view::npos) break;
    pos = eol + 1;
  }
  return make_hypergraph(token_edges);
}

std::string render_hypergraph(const Hypergraph& h) {
  std::ostringstream os;
  for (const auto& e : edges_by_token_order(h)) {
    bool first = true;
    for (const auto& t : edge_tokens(*h.table(), e)) {
      if (!first) os << ' ';
      os << t;
      first = false;
    }
    os << '\n';
  }
  return os.str();
}

Hypergraph hg(std::string_view text) { return parse_hypergraph(text).hypergraph; }

}  // namespace hyperacyc
