#include "hyperacyc/oracle.hpp"

#include <algorithm>
#include <bit>

namespace hyperacyc {

namespace {

constexpr std::size_t kMaxOracleVertices = 30;
constexpr std::size_t kMaxOracleBetaEdges = 25;

// Dense bit-mask view of a desk-scale hypergraph: bit i of an edge mask is
// verts[i].  Keeps the subset scans allocation-free.
struct MaskView {
  std::vector<VertexIndex> verts;
  std::vector<std::uint32_t> edges;
};

MaskView to_masks(const Hypergraph& h) {
  MaskView mv;
  mv.verts = h.vertex_universe().members();
  if (mv.verts.size() > kMaxOracleVertices)
    throw Error("brute-force oracle limited to " + std::to_string(kMaxOracleVertices) +
                " vertices, got " + std::to_string(mv.verts.size()));
  for (const auto& e : h.edges()) {
    std::uint32_t m = 0;
    for (std::size_t i = 0; i < mv.verts.size(); ++i)
      if (e.contains(mv.verts[i])) m |= std::uint32_t{1} << i;
    mv.edges.push_back(m);
  }
  return mv;
}

std::vector<std::uint32_t> induced_masks(const std::vector<std::uint32_t>& edges,
                                         std::uint32_t smask) {
  std::vector<std::uint32_t> out;
  for (auto e : edges) {
    if (auto r = e & smask) out.push_back(r);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::uint32_t> maximal_masks(std::vector<std::uint32_t> edges) {
  std::vector<std::uint32_t> out;
  for (auto e : edges) {
    bool maximal = true;
    for (auto f : edges)
      if (e != f && (e & f) == e) { maximal = false; break; }
    if (maximal) out.push_back(e);
  }
  return out;
}

// If the minimized hypergraph induced on smask is a polygon covering smask,
// returns the cyclic order as bit positions.
std::optional<std::vector<unsigned>> polygon_on(const std::vector<std::uint32_t>& edges,
                                                std::uint32_t smask) {
  const unsigned n = std::popcount(smask);
  if (n < 3) return std::nullopt;
  auto m = maximal_masks(induced_masks(edges, smask));
  if (m.size() != n) return std::nullopt;
  unsigned degree[32] = {};
  for (auto e : m) {
    if (std::popcount(e) != 2) return std::nullopt;
    for (unsigned b = 0; b < 32; ++b)
      if (e & (std::uint32_t{1} << b)) ++degree[b];
  }
  for (unsigned b = 0; b < 32; ++b)
    if ((smask >> b & 1) && degree[b] != 2) return std::nullopt;
  // Degrees are all 2 with n edges; a closed walk of length n means a single
  // cycle covering smask.
  std::vector<unsigned> order;
  unsigned start = std::countr_zero(smask);
  unsigned prev = ~0u, cur = start;
  do {
    order.push_back(cur);
    unsigned nxt = ~0u;
    for (auto e : m) {
      if (!(e & (std::uint32_t{1} << cur))) continue;
      unsigned other = std::countr_zero(e & ~(std::uint32_t{1} << cur));
      if (other != prev) { nxt = other; break; }
    }
    prev = cur;
    cur = nxt;
  } while (cur != start && order.size() <= n);
  if (order.size() != n || cur != start) return std::nullopt;
  return order;
}

std::optional<CycleWitness> cycle_on_masks(const MaskView& mv,
                                           const std::vector<std::uint32_t>& edges) {
  const std::uint32_t top = mv.verts.size() >= 32
                                ? ~std::uint32_t{0}
                                : (std::uint32_t{1} << mv.verts.size()) - 1;
  for (std::uint32_t s = 1; s <= top; ++s) {
    if (std::popcount(s) < 3) continue;
    if (auto order = polygon_on(edges, s)) {
      CycleWitness w;
      for (unsigned b : *order) w.vertices.push_back(mv.verts[b]);
      return w;
    }
    if (s == top) break;
  }
  return std::nullopt;
}

}  // namespace

std::optional<CycleWitness> has_cycle_brute(const Hypergraph& h) {
  auto mv = to_masks(h);
  return cycle_on_masks(mv, mv.edges);
}

bool is_cycle_free_brute(const Hypergraph& h) { return !has_cycle_brute(h).has_value(); }

std::optional<NonConformalClique> conformal_violation_brute(const Hypergraph& h) {
  auto mv = to_masks(h);
  const std::uint32_t top = mv.verts.size() >= 32
                                ? ~std::uint32_t{0}
                                : (std::uint32_t{1} << mv.verts.size()) - 1;
  for (std::uint32_t s = 1; s <= top; ++s) {
    if (std::popcount(s) >= 3) {
      auto m = maximal_masks(induced_masks(mv.edges, s));
      std::vector<std::uint32_t> expect;
      for (unsigned b = 0; b < 32; ++b)
        if (s >> b & 1) expect.push_back(s & ~(std::uint32_t{1} << b));
      std::sort(expect.begin(), expect.end());
      if (m == expect) {
        VertexSet clique(h.table()->size());
        for (unsigned b = 0; b < 32; ++b)
          if (s >> b & 1) clique.add(mv.verts[b]);
        return NonConformalClique{std::move(clique)};
      }
    }
    if (s == top) break;
  }
  return std::nullopt;
}

bool is_conformal_brute(const Hypergraph& h) {
  return !conformal_violation_brute(h).has_value();
}

bool is_alpha_brute(const Hypergraph& h) {
  return is_conformal_brute(h) && is_cycle_free_brute(h);
}

std::optional<BetaCycleWitness> beta_violation_brute(const Hypergraph& h) {
  auto mv = to_masks(h);
  const std::size_t m = mv.edges.size();
  if (m > kMaxOracleBetaEdges)
    throw Error("beta brute force limited to " + std::to_string(kMaxOracleBetaEdges) +
                " edges, got " + std::to_string(m));
  std::vector<std::uint32_t> selected;
  for (std::uint64_t sub = 1; sub < (std::uint64_t{1} << m); ++sub) {
    selected.clear();
    for (std::size_t i = 0; i < m; ++i)
      if (sub >> i & 1) selected.push_back(mv.edges[i]);
    if (auto cyc = cycle_on_masks(mv, selected)) {
      BetaCycleWitness w;
      for (std::size_t i = 0; i < m; ++i)
        if (sub >> i & 1) w.edge_subset.push_back(h.edges()[i]);
      w.cycle = std::move(*cyc);
      return w;
    }
  }
  return std::nullopt;
}

bool is_beta_brute(const Hypergraph& h) { return !beta_violation_brute(h).has_value(); }

std::optional<GammaTriangle> gamma_triangle_brute(const Hypergraph& h) {
  auto mv = to_masks(h);
  const std::size_t k = mv.verts.size();
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      for (std::size_t l = j + 1; l < k; ++l) {
        std::uint32_t t = (std::uint32_t{1} << i) | (std::uint32_t{1} << j) |
                          (std::uint32_t{1} << l);
        auto p = induced_masks(mv.edges, t);
        if (!std::binary_search(p.begin(), p.end(), t)) continue;
        for (std::size_t c : {i, j, l}) {
          std::uint32_t rest = t & ~(std::uint32_t{1} << c);
          unsigned a = unsigned(std::countr_zero(rest));
          unsigned b = unsigned(std::countr_zero(rest & (rest - 1)));
          std::uint32_t ca = (std::uint32_t{1} << c) | (std::uint32_t{1} << a);
          std::uint32_t cb = (std::uint32_t{1} << c) | (std::uint32_t{1} << b);
          if (std::binary_search(p.begin(), p.end(), ca) &&
              std::binary_search(p.begin(), p.end(), cb))
            return GammaTriangle{mv.verts[c], mv.verts[a], mv.verts[b]};
        }
      }
    }
  }
  return std::nullopt;
}

bool is_gamma_brute(const Hypergraph& h) {
  return !has_cycle_brute(h).has_value() && !gamma_triangle_brute(h).has_value();
}

CensusStream::CensusStream(std::size_t vertex_count, std::optional<std::size_t> edge_cap)
    : n_(vertex_count), cap_(edge_cap) {
  if (n_ > 5) throw Error("census limited to 5 vertices");
  std::vector<std::string> tokens;
  for (std::size_t i = 1; i <= n_; ++i) tokens.push_back("v" + std::to_string(i));
  table_ = std::make_shared<VertexTable>(tokens);
}

std::uint64_t CensusStream::total_uncapped() const {
  return std::uint64_t{1} << ((std::uint64_t{1} << n_) - 1);
}

Hypergraph CensusStream::member(std::uint64_t edge_set_mask) const {
  std::vector<Edge> edges;
  const std::uint32_t candidates = (std::uint32_t{1} << n_) - 1;
  for (std::uint32_t c = 1; c <= candidates; ++c) {
    if (!(edge_set_mask >> (c - 1) & 1)) continue;
    Edge e(n_);
    for (std::size_t b = 0; b < n_; ++b)
      if (c >> b & 1) e.add(b);
    edges.push_back(std::move(e));
  }
  return Hypergraph(table_, std::move(edges));
}

std::optional<Hypergraph> CensusStream::next() {
  const std::uint64_t total = total_uncapped();
  while (next_mask_ < total) {
    std::uint64_t m = next_mask_++;
    if (cap_ && static_cast<std::size_t>(std::popcount(m)) > *cap_) continue;
    return member(m);
  }
  return std::nullopt;
}

Hypergraph random_member(std::mt19937& rng, const VertexTablePtr& table,
                         std::size_t max_edges) {
  const std::size_t n = table->size();
  const std::uint32_t candidates = (std::uint32_t{1} << n) - 1;
  // Raw modulo keeps the sequence identical across standard libraries.
  std::size_t k = 1 + rng() % max_edges;
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < k; ++i) {
    std::uint32_t c = 1 + rng() % candidates;
    Edge e(n);
    for (std::size_t b = 0; b < n; ++b)
      if (c >> b & 1) e.add(b);
    edges.push_back(std::move(e));
  }
  return Hypergraph(table, std::move(edges));
}

}  // namespace hyperacyc
