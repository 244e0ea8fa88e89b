#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace rtlab {

using Vertex = int;
using Color = int;  // 1-based

/// Raised for malformed caller input: out-of-range vertices or colors, loops,
/// dimension mismatches, unparsable documents.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct EdgeRef {
  Color color = 1;
  Vertex from = 0;
  Vertex to = 0;

  auto operator<=>(const EdgeRef&) const = default;
};

/// Per-color view of the edges between an ordered pair (u, v).
struct ColorLink {
  int count = 0;         // 0, 1 or 2
  bool forward = false;  // meaningful when count == 1: true iff the edge is u->v
};

struct PairProfile {
  std::vector<ColorLink> colors;  // index 0 is color 1

  int total() const;
  int doubles() const;
};

/// A sequence G = (G_1, ..., G_c) of directed graphs on vertices 0..n-1,
/// stored as one dense ordered-pair indicator per color. Immutable; build
/// instances through GraphBuilder.
class ColoredDigraph {
 public:
  ColoredDigraph() = default;

  int n() const { return n_; }
  int c() const { return c_; }

  bool has_edge(Color color, Vertex from, Vertex to) const;

  std::size_t count_color(Color color) const;
  std::size_t count_total() const;

  /// Edges of `color` in either direction between U and V. Every ordered pair
  /// (a, b) with a != b is counted at most once, which makes overlapping sets
  /// well defined.
  std::size_t count_between(Color color, std::span<const Vertex> U,
                            std::span<const Vertex> V) const;

  PairProfile classify_pair(Vertex u, Vertex v) const;

  /// Total edges between u and v over all colors (0..2c).
  int pair_total(Vertex u, Vertex v) const;

  bool is_oriented() const;

  /// Induced sub-configuration on S, relabelled 0..|S|-1 in the order given.
  ColoredDigraph induced(std::span<const Vertex> S) const;

  /// All edges sorted by (color, from, to).
  std::vector<EdgeRef> edges() const;

  bool operator==(const ColoredDigraph&) const = default;

 private:
  friend class GraphBuilder;

  ColoredDigraph(int n, int c);
  std::size_t index(Color color, Vertex from, Vertex to) const {
    return (static_cast<std::size_t>(color - 1) * n_ + from) * n_ + to;
  }
  void check_color(Color color) const;
  void check_vertex(Vertex v) const;

  int n_ = 0;
  int c_ = 0;
  std::vector<std::uint8_t> bits_;
};

class GraphBuilder {
 public:
  GraphBuilder(int n, int c);
  explicit GraphBuilder(ColoredDigraph start);

  GraphBuilder& add_edge(EdgeRef e);
  GraphBuilder& add_edge(Color color, Vertex from, Vertex to) {
    return add_edge(EdgeRef{color, from, to});
  }
  /// Both directions in one color.
  GraphBuilder& add_double(Color color, Vertex u, Vertex v);

  int n() const { return g_.n_; }
  int c() const { return g_.c_; }

  ColoredDigraph build() const { return g_; }

 private:
  ColoredDigraph g_;
};

/// Value-semantic insertion: returns G with e added. Idempotent.
ColoredDigraph add_edge(const ColoredDigraph& g, EdgeRef e);

}  // namespace rtlab
