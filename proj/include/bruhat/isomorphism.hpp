#pragma once

#include <algorithm>
#include <cstdint>
#include <tuple>
#include <vector>

#include "bruhat/poset.hpp"

namespace bruhat {

/// Label-independent certificate of a finite poset: two posets are
/// isomorphic iff their certificates are equal.
using PosetCertificate = std::vector<std::uint32_t>;

namespace detail {

struct CoverGraph {
  std::vector<std::vector<std::size_t>> up;
  std::vector<std::vector<std::size_t>> down;
};

/// Splits colour classes by the multisets of colours on upper and lower
/// covers until stable. New colour ids are ranks of sorted signatures, so
/// they depend only on structure.
inline void refine(const CoverGraph& g, std::vector<std::uint32_t>& colors) {
  const std::size_t n = colors.size();
  using Signature = std::tuple<std::uint32_t, std::vector<std::uint32_t>, std::vector<std::uint32_t>>;
  std::size_t classes = 0;
  {
    auto c = colors;
    std::sort(c.begin(), c.end());
    classes = static_cast<std::size_t>(std::unique(c.begin(), c.end()) - c.begin());
  }
  while (true) {
    std::vector<Signature> sig(n);
    for (std::size_t v = 0; v < n; ++v) {
      std::vector<std::uint32_t> ups;
      std::vector<std::uint32_t> downs;
      for (auto u : g.up[v]) ups.push_back(colors[u]);
      for (auto d : g.down[v]) downs.push_back(colors[d]);
      std::sort(ups.begin(), ups.end());
      std::sort(downs.begin(), downs.end());
      sig[v] = {colors[v], std::move(ups), std::move(downs)};
    }
    auto sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (std::size_t v = 0; v < n; ++v) {
      colors[v] = static_cast<std::uint32_t>(std::lower_bound(sorted.begin(), sorted.end(), sig[v]) - sorted.begin());
    }
    if (sorted.size() == classes) return;
    classes = sorted.size();
  }
}

inline PosetCertificate search(const CoverGraph& g, std::vector<std::uint32_t> colors) {
  refine(g, colors);
  const std::size_t n = colors.size();
  std::vector<std::size_t> class_size(n, 0);
  for (auto c : colors) ++class_size[c];
  std::size_t target = n;
  for (std::size_t c = 0; c < n; ++c) {
    if (class_size[c] > 1) {
      target = c;
      break;
    }
  }
  if (target == n) {
    PosetCertificate cert{static_cast<std::uint32_t>(n)};
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    for (std::size_t v = 0; v < n; ++v) {
      for (auto u : g.up[v]) edges.emplace_back(colors[v], colors[u]);
    }
    std::sort(edges.begin(), edges.end());
    for (auto [a, b] : edges) {
      cert.push_back(a);
      cert.push_back(b);
    }
    return cert;
  }
  PosetCertificate best;
  for (std::size_t v = 0; v < n; ++v) {
    if (colors[v] != target) continue;
    std::vector<std::uint32_t> split(n);
    for (std::size_t u = 0; u < n; ++u) split[u] = colors[u] * 2 + (colors[u] == target && u != v ? 1 : 0);
    auto cert = search(g, std::move(split));
    if (best.empty() || cert < best) best = std::move(cert);
  }
  return best;
}

}  // namespace detail

/// Canonical form by iterated colour refinement seeded with (height, depth,
/// down-set size, up-set size), individualizing the first non-singleton
/// class and keeping the lexicographically least certificate.
template <class Label>
PosetCertificate canonical_form(const FinitePoset<Label>& poset) {
  const std::size_t n = poset.size();
  detail::CoverGraph g;
  g.up.resize(n);
  g.down.resize(n);
  for (std::size_t v = 0; v < n; ++v) {
    g.up[v] = poset.upper_covers(v);
    g.down[v] = poset.lower_covers(v);
  }
  std::vector<int> height(n, 0);
  std::vector<int> depth(n, 0);
  for (std::size_t v = 0; v < n; ++v) {
    for (auto d : g.down[v]) height[v] = std::max(height[v], height[d] + 1);
  }
  for (std::size_t v = n; v-- > 0;) {
    for (auto u : g.up[v]) depth[v] = std::max(depth[v], depth[u] + 1);
  }
  using Seed = std::tuple<int, int, std::size_t, std::size_t>;
  std::vector<Seed> seeds(n);
  for (std::size_t v = 0; v < n; ++v) seeds[v] = {height[v], depth[v], poset.down(v).count(), poset.up(v).count()};
  auto sorted = seeds;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<std::uint32_t> colors(n);
  for (std::size_t v = 0; v < n; ++v) {
    colors[v] = static_cast<std::uint32_t>(std::lower_bound(sorted.begin(), sorted.end(), seeds[v]) - sorted.begin());
  }
  return detail::search(g, std::move(colors));
}

template <class A, class B>
bool are_isomorphic(const FinitePoset<A>& p, const FinitePoset<B>& q) {
  if (p.size() != q.size()) return false;
  if (p.cover_edges().size() != q.cover_edges().size()) return false;
  return canonical_form(p) == canonical_form(q);
}

}  // namespace bruhat
