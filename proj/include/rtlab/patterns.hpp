#pragma once

#include <array>
#include <cstdint>
#include <optional>

#include "rtlab/core.hpp"
#include "rtlab/triangle.hpp"

namespace rtlab {

/// Three distinct vertices in pattern roles and the three pattern edges, each
/// tagged with its color. For Directed the edges are (u,v), (v,w), (w,u); for
/// Transitive they are (u,v), (v,w), (u,w).
struct RainbowWitness {
  TriangleKind kind = TriangleKind::Directed;
  std::array<Vertex, 3> vertices{};
  std::array<EdgeRef, 3> edges{};

  bool operator==(const RainbowWitness&) const = default;
};

/// Lexicographically least witness by (u, v, w, colors), or nothing.
std::optional<RainbowWitness> find_rainbow(const ColoredDigraph& g, TriangleKind kind);

/// Rainbow copies with color assignments counted separately. Directed copies
/// are identified up to rotation of (u, v, w); transitive copies by the
/// role-labelled triple.
std::uint64_t count_rainbow(const ColoredDigraph& g, TriangleKind kind);

/// Independent re-check of every witness invariant against g.
bool is_valid_witness(const ColoredDigraph& g, const RainbowWitness& w);

/// Single-color digraph on V(G) with uv present iff the pair carries exactly
/// c+1 edges and at least 3 of them go from u to v.
ColoredDigraph build_H(const ColoredDigraph& g);

}  // namespace rtlab
