#include "hyperacyc/iso.hpp"

#include <algorithm>
#include <functional>

namespace hyperacyc {

namespace {

// Sorted list of cardinalities of the edges containing v.
std::vector<std::size_t> signature(const Hypergraph& h, VertexIndex v) {
  std::vector<std::size_t> sig;
  for (const auto& e : h.edges())
    if (e.contains(v)) sig.push_back(e.count());
  std::sort(sig.begin(), sig.end());
  return sig;
}

}  // namespace

std::optional<IsoMapping> find_isomorphism(const Hypergraph& a, const Hypergraph& b) {
  if (a.edge_count() != b.edge_count()) return std::nullopt;
  auto va = a.vertex_universe().members();
  auto vb = b.vertex_universe().members();
  if (va.size() != vb.size()) return std::nullopt;

  std::vector<std::size_t> sizes_a, sizes_b;
  for (const auto& e : a.edges()) sizes_a.push_back(e.count());
  for (const auto& e : b.edges()) sizes_b.push_back(e.count());
  std::sort(sizes_a.begin(), sizes_a.end());
  std::sort(sizes_b.begin(), sizes_b.end());
  if (sizes_a != sizes_b) return std::nullopt;

  auto by_rank = [](const Hypergraph& h, std::vector<VertexIndex>& vs) {
    std::sort(vs.begin(), vs.end(), [&](VertexIndex x, VertexIndex y) {
      return h.table()->rank(x) < h.table()->rank(y);
    });
  };
  by_rank(a, va);
  by_rank(b, vb);

  std::vector<std::vector<std::size_t>> sig_a, sig_b;
  for (auto v : va) sig_a.push_back(signature(a, v));
  for (auto v : vb) sig_b.push_back(signature(b, v));
  {
    auto sa = sig_a;
    auto sb = sig_b;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }

  std::vector<VertexIndex> image(a.table()->size(), 0);
  std::vector<bool> used(vb.size(), false);

  std::function<bool(std::size_t)> assign = [&](std::size_t i) -> bool {
    if (i == va.size()) {
      std::vector<Edge> mapped;
      mapped.reserve(a.edge_count());
      for (const auto& e : a.edges()) {
        Edge m(b.table()->size());
        for (VertexIndex v : e.members()) m.add(image[v]);
        mapped.push_back(std::move(m));
      }
      std::sort(mapped.begin(), mapped.end());
      return mapped == b.edges();
    }
    for (std::size_t j = 0; j < vb.size(); ++j) {
      if (used[j] || sig_a[i] != sig_b[j]) continue;
      used[j] = true;
      image[va[i]] = vb[j];
      if (assign(i + 1)) return true;
      used[j] = false;
    }
    return false;
  };

  if (!assign(0)) return std::nullopt;
  return IsoMapping{std::move(image)};
}

bool isomorphic(const Hypergraph& a, const Hypergraph& b) {
  return find_isomorphism(a, b).has_value();
}

}  // namespace hyperacyc
