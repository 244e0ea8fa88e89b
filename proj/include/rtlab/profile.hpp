#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "rtlab/triangle.hpp"

// Bitmask encoding of everything between one unordered vertex pair (lo, hi),
// lo < hi. Bit 2(i-1) is the edge lo->hi in color i, bit 2(i-1)+1 is hi->lo.
// Shared by the search and scenario engines.
namespace rtlab::profile {

using Profile = std::uint32_t;
using ColorMask = std::uint32_t;  // bit i-1 set iff color i present

inline constexpr int kMaxColors = 8;

constexpr Profile domain_size(int c) { return Profile{1} << (2 * c); }

// Gathers the even bits of a 16-bit word into its low byte.
constexpr std::uint32_t even_bits(std::uint32_t x) {
  x &= 0x5555u;
  x = (x | (x >> 1)) & 0x3333u;
  x = (x | (x >> 2)) & 0x0f0fu;
  return (x | (x >> 4)) & 0x00ffu;
}

constexpr ColorMask forward(Profile p, int c) { return even_bits(p) & ((1u << c) - 1); }

constexpr ColorMask backward(Profile p, int c) { return even_bits(p >> 1) & ((1u << c) - 1); }

constexpr int edges(Profile p) { return std::popcount(p); }

constexpr int edges_in(Profile p, ColorMask colors, int c) {
  return std::popcount(forward(p, c) & colors) + std::popcount(backward(p, c) & colors);
}

constexpr int doubles(Profile p, int c) { return std::popcount(forward(p, c) & backward(p, c)); }

constexpr bool is_oriented(Profile p, int c) { return doubles(p, c) == 0; }

/// The same pair seen from the other endpoint.
constexpr Profile swapped(Profile p, int c) {
  Profile q = 0;
  for (int i = 0; i < c; ++i) {
    q |= ((p >> (2 * i)) & 1u) << (2 * i + 1);
    q |= ((p >> (2 * i + 1)) & 1u) << (2 * i);
  }
  return q;
}

/// Edge from -> to in `color` (1-based) for a pair stored as (lo, hi).
constexpr Profile bit(int color, bool lo_to_hi) {
  return Profile{1} << (2 * (color - 1) + (lo_to_hi ? 0 : 1));
}

/// Distinct representatives: colors x in m1, y in m2, z in m3, pairwise distinct.
constexpr bool has_distinct_triple(ColorMask m1, ColorMask m2, ColorMask m3) {
  while (m1) {
    const ColorMask x = m1 & (~m1 + 1);
    m1 &= m1 - 1;
    const ColorMask r2 = m2 & ~x;
    const ColorMask r3 = m3 & ~x;
    if (r2 && r3 && !(r2 == r3 && std::has_single_bit(r2))) return true;
  }
  return false;
}

/// Directed color masks of a vertex triple a < b < c.
struct TripleMasks {
  ColorMask ab, ba, ac, ca, bc, cb;
};

inline TripleMasks triple_masks(Profile ab, Profile ac, Profile bc, int c) {
  return {forward(ab, c), backward(ab, c), forward(ac, c),
          backward(ac, c), forward(bc, c), backward(bc, c)};
}

inline bool has_rainbow(TriangleKind kind, const TripleMasks& m) {
  if (kind == TriangleKind::Directed) {
    return has_distinct_triple(m.ab, m.bc, m.ca) || has_distinct_triple(m.ac, m.cb, m.ba);
  }
  // Transitive: roles (u, v, w) range over the six orderings; edges uv, vw, uw.
  return has_distinct_triple(m.ab, m.bc, m.ac) || has_distinct_triple(m.ac, m.cb, m.ab) ||
         has_distinct_triple(m.ba, m.ac, m.bc) || has_distinct_triple(m.bc, m.ca, m.ba) ||
         has_distinct_triple(m.ca, m.ab, m.cb) || has_distinct_triple(m.cb, m.ba, m.ca);
}

/// Number of edges leaving u toward the other endpoint, over all colors;
/// `u_is_lo` says which end of the stored pair u is.
constexpr int edges_from(Profile p, bool u_is_lo, int c) {
  return std::popcount(u_is_lo ? forward(p, c) : backward(p, c));
}

/// All profiles in increasing numeric order, optionally restricted to oriented ones.
std::vector<Profile> all_profiles(int c, bool oriented_only);

}  // namespace rtlab::profile
