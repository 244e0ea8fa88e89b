#pragma once

// Brute-force reference implementations. They use only the public
// ColoredDigraph queries and never the library's detectors or engines.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "rtlab/core.hpp"
#include "rtlab/triangle.hpp"

namespace oracle {

using rtlab::Color;
using rtlab::ColoredDigraph;
using rtlab::GraphBuilder;
using rtlab::TriangleKind;

// Edges (role pairs) of the pattern on roles (u, v, w). G is anything with
// has_edge(color, from, to), n() and c().
template <class G>
bool pattern_present(const G& g, TriangleKind kind, int u, int v, int w, Color i, Color j,
                            Color k) {
  if (kind == TriangleKind::Directed)
    return g.has_edge(i, u, v) && g.has_edge(j, v, w) && g.has_edge(k, w, u);
  return g.has_edge(i, u, v) && g.has_edge(j, v, w) && g.has_edge(k, u, w);
}

// Every ordered vertex triple and every injective color assignment.
template <class G, class Fn>
void for_each_copy(const G& g, TriangleKind kind, Fn&& fn) {
  const int n = g.n(), c = g.c();
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      for (int w = 0; w < n; ++w) {
        if (u == v || v == w || u == w) continue;
        for (Color i = 1; i <= c; ++i)
          for (Color j = 1; j <= c; ++j)
            for (Color k = 1; k <= c; ++k) {
              if (i == j || j == k || i == k) continue;
              if (pattern_present(g, kind, u, v, w, i, j, k)) fn(u, v, w, i, j, k);
            }
      }
}

template <class G>
bool has_rainbow(const G& g, TriangleKind kind) {
  bool found = false;
  for_each_copy(g, kind, [&](auto...) { found = true; });
  return found;
}

// Directed copies appear once per rotation of (u, v, w) with rotated colors.
inline std::uint64_t count_rainbow(const ColoredDigraph& g, TriangleKind kind) {
  std::uint64_t n = 0;
  for_each_copy(g, kind, [&](auto...) { ++n; });
  return kind == TriangleKind::Directed ? n / 3 : n;
}

inline ColoredDigraph random_graph(std::mt19937_64& rng, int n, int c, double p) {
  std::bernoulli_distribution coin(p);
  GraphBuilder b(n, c);
  for (Color i = 1; i <= c; ++i)
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v)
        if (u != v && coin(rng)) b.add_edge(i, u, v);
  return b.build();
}

// Graph on n vertices from a bit vector over (color, ordered pair) slots.
struct SlotSpace {
  int n, c;
  std::vector<rtlab::EdgeRef> slots;

  SlotSpace(int n_, int c_) : n(n_), c(c_) {
    for (Color i = 1; i <= c; ++i)
      for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
          if (u != v) slots.push_back({i, u, v});
  }

  ColoredDigraph graph(std::uint64_t bits) const {
    GraphBuilder b(n, c);
    for (std::size_t s = 0; s < slots.size(); ++s)
      if (bits >> s & 1) b.add_edge(slots[s]);
    return b.build();
  }
};

struct SearchOracle {
  std::int64_t max_total = -1;
  std::int64_t max_min = -1;
};

struct FullSearch {
  SearchOracle digraph;
  SearchOracle oriented;
};

// Full enumeration over every colored digraph on n vertices; the oriented
// optima come from the same pass. Feasible for n * (n - 1) * c <= 18.
inline FullSearch full_search(int n, int c, TriangleKind kind) {
  SlotSpace space(n, c);
  FullSearch out;
  const std::uint64_t total = std::uint64_t{1} << space.slots.size();
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    const ColoredDigraph g = space.graph(bits);
    if (has_rainbow(g, kind)) continue;
    std::int64_t t = 0, m = INT64_MAX;
    for (Color i = 1; i <= c; ++i) {
      const auto e = static_cast<std::int64_t>(g.count_color(i));
      t += e;
      m = std::min(m, e);
    }
    for (SearchOracle* o : {&out.digraph, g.is_oriented() ? &out.oriented : nullptr}) {
      if (!o) continue;
      o->max_total = std::max(o->max_total, t);
      o->max_min = std::max(o->max_min, m);
    }
  }
  return out;
}

}  // namespace oracle
