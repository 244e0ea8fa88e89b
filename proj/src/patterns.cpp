#include "rtlab/patterns.hpp"

#include <bit>
#include <set>
#include <vector>


namespace rtlab {

std::string to_string(TriangleKind k) {
  return k == TriangleKind::Directed ? "directed" : "transitive";
}

std::optional<TriangleKind> parse_triangle_kind(std::string_view s) {
  if (s == "directed") return TriangleKind::Directed;
  if (s == "transitive") return TriangleKind::Transitive;
  return std::nullopt;
}

namespace {

// Color mask of every ordered pair; the only precomputation the detector uses.
class MaskTable {
 public:
  explicit MaskTable(const ColoredDigraph& g) : n_(g.n()) {
    masks_.assign(static_cast<std::size_t>(n_) * n_, 0);
    for (const EdgeRef& e : g.edges()) at(e.from, e.to) |= std::uint64_t{1} << (e.color - 1);
  }
  std::uint64_t operator()(Vertex a, Vertex b) const {
    return masks_[static_cast<std::size_t>(a) * n_ + b];
  }

 private:
  std::uint64_t& at(Vertex a, Vertex b) { return masks_[static_cast<std::size_t>(a) * n_ + b]; }
  int n_;
  std::vector<std::uint64_t> masks_;
};

std::array<std::pair<Vertex, Vertex>, 3> pattern_edges(TriangleKind kind, Vertex u, Vertex v,
                                                       Vertex w) {
  if (kind == TriangleKind::Directed) return {{{u, v}, {v, w}, {w, u}}};
  return {{{u, v}, {v, w}, {u, w}}};
}

// Calls f(c1, c2, c3) for every distinct-color assignment in lexicographic
// order; stops early when f returns true.
template <typename F>
bool for_each_assignment(std::uint64_t m1, std::uint64_t m2, std::uint64_t m3, F&& f) {
  for (std::uint64_t a = m1; a; a &= a - 1) {
    const int c1 = std::countr_zero(a);
    for (std::uint64_t b = m2 & ~(std::uint64_t{1} << c1); b; b &= b - 1) {
      const int c2 = std::countr_zero(b);
      const std::uint64_t rest = m3 & ~(std::uint64_t{1} << c1) & ~(std::uint64_t{1} << c2);
      for (std::uint64_t d = rest; d; d &= d - 1) {
        if (f(c1 + 1, c2 + 1, std::countr_zero(d) + 1)) return true;
      }
    }
  }
  return false;
}

}  // namespace

std::optional<RainbowWitness> find_rainbow(const ColoredDigraph& g, TriangleKind kind) {
  if (g.c() < 3 || g.n() < 3) return std::nullopt;
  if (g.c() > 64) throw InputError("detector supports at most 64 colors");
  const MaskTable mask(g);
  const int n = g.n();
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (v == u || !mask(u, v)) continue;
      for (Vertex w = 0; w < n; ++w) {
        if (w == u || w == v) continue;
        const auto pe = pattern_edges(kind, u, v, w);
        const std::uint64_t m1 = mask(pe[0].first, pe[0].second);
        const std::uint64_t m2 = mask(pe[1].first, pe[1].second);
        const std::uint64_t m3 = mask(pe[2].first, pe[2].second);
        std::optional<RainbowWitness> found;
        for_each_assignment(m1, m2, m3, [&](int c1, int c2, int c3) {
          RainbowWitness wit;
          wit.kind = kind;
          wit.vertices = {u, v, w};
          wit.edges = {EdgeRef{c1, pe[0].first, pe[0].second},
                       EdgeRef{c2, pe[1].first, pe[1].second},
                       EdgeRef{c3, pe[2].first, pe[2].second}};
          found = wit;
          return true;
        });
        if (found) return found;
      }
    }
  }
  return std::nullopt;
}

std::uint64_t count_rainbow(const ColoredDigraph& g, TriangleKind kind) {
  if (g.c() < 3 || g.n() < 3) return 0;
  if (g.c() > 64) throw InputError("detector supports at most 64 colors");
  const MaskTable mask(g);
  const int n = g.n();
  std::uint64_t total = 0;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (v == u) continue;
      for (Vertex w = 0; w < n; ++w) {
        if (w == u || w == v) continue;
        // A directed copy is counted once, from the rotation starting at its least vertex.
        if (kind == TriangleKind::Directed && (v < u || w < u)) continue;
        const auto pe = pattern_edges(kind, u, v, w);
        for_each_assignment(mask(pe[0].first, pe[0].second), mask(pe[1].first, pe[1].second),
                            mask(pe[2].first, pe[2].second), [&](int, int, int) {
                              ++total;
                              return false;
                            });
      }
    }
  }
  return total;
}

bool is_valid_witness(const ColoredDigraph& g, const RainbowWitness& w) {
  const auto [u, v, x] = w.vertices;
  for (Vertex a : w.vertices)
    if (a < 0 || a >= g.n()) return false;
  if (u == v || v == x || u == x) return false;
  const std::set<Color> colors{w.edges[0].color, w.edges[1].color, w.edges[2].color};
  if (colors.size() != 3) return false;
  const auto shape = pattern_edges(w.kind, u, v, x);
  for (std::size_t k = 0; k < 3; ++k) {
    const EdgeRef& e = w.edges[k];
    if (e.from != shape[k].first || e.to != shape[k].second) return false;
    if (e.color < 1 || e.color > g.c()) return false;
    if (!g.has_edge(e.color, e.from, e.to)) return false;
  }
  return true;
}

ColoredDigraph build_H(const ColoredDigraph& g) {
  GraphBuilder h(g.n(), 1);
  const int c = g.c();
  for (Vertex u = 0; u < g.n(); ++u) {
    for (Vertex v = 0; v < g.n(); ++v) {
      if (u == v || g.pair_total(u, v) != c + 1) continue;
      int out = 0;
      for (Color i = 1; i <= c; ++i) out += g.has_edge(i, u, v) ? 1 : 0;
      if (out >= 3) h.add_edge(1, u, v);
    }
  }
  return h.build();
}

}  // namespace rtlab
