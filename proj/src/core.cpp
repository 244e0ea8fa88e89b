#include "rtlab/core.hpp"

#include <algorithm>
#include <numeric>

namespace rtlab {

int PairProfile::total() const {
  int t = 0;
  for (const auto& l : colors) t += l.count;
  return t;
}

int PairProfile::doubles() const {
  return static_cast<int>(std::count_if(colors.begin(), colors.end(),
                                        [](const ColorLink& l) { return l.count == 2; }));
}

ColoredDigraph::ColoredDigraph(int n, int c) : n_(n), c_(c) {
  if (n < 0) throw InputError("vertex count must be non-negative");
  if (c < 0) throw InputError("color count must be non-negative");
  bits_.assign(static_cast<std::size_t>(n) * n * c, 0);
}

void ColoredDigraph::check_color(Color color) const {
  if (color < 1 || color > c_)
    throw InputError("color " + std::to_string(color) + " outside 1.." + std::to_string(c_));
}

void ColoredDigraph::check_vertex(Vertex v) const {
  if (v < 0 || v >= n_)
    throw InputError("vertex " + std::to_string(v) + " outside 0.." + std::to_string(n_ - 1));
}

bool ColoredDigraph::has_edge(Color color, Vertex from, Vertex to) const {
  check_color(color);
  check_vertex(from);
  check_vertex(to);
  return bits_[index(color, from, to)] != 0;
}

std::size_t ColoredDigraph::count_color(Color color) const {
  check_color(color);
  const auto begin = bits_.begin() + static_cast<std::ptrdiff_t>(index(color, 0, 0));
  const auto end = begin + static_cast<std::ptrdiff_t>(static_cast<std::size_t>(n_) * n_);
  return static_cast<std::size_t>(std::count(begin, end, std::uint8_t{1}));
}

std::size_t ColoredDigraph::count_total() const {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), std::uint8_t{1}));
}

std::size_t ColoredDigraph::count_between(Color color, std::span<const Vertex> U,
                                          std::span<const Vertex> V) const {
  check_color(color);
  std::vector<char> in_u(static_cast<std::size_t>(n_), 0);
  std::vector<char> in_v(static_cast<std::size_t>(n_), 0);
  for (Vertex u : U) {
    check_vertex(u);
    in_u[static_cast<std::size_t>(u)] = 1;
  }
  for (Vertex v : V) {
    check_vertex(v);
    in_v[static_cast<std::size_t>(v)] = 1;
  }
  std::size_t total = 0;
  for (Vertex a = 0; a < n_; ++a) {
    for (Vertex b = 0; b < n_; ++b) {
      if (a == b) continue;
      const bool counted = (in_u[a] && in_v[b]) || (in_v[a] && in_u[b]);
      if (counted && bits_[index(color, a, b)]) ++total;
    }
  }
  return total;
}

PairProfile ColoredDigraph::classify_pair(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw InputError("classify_pair needs two distinct vertices");
  PairProfile p;
  p.colors.resize(static_cast<std::size_t>(c_));
  for (Color i = 1; i <= c_; ++i) {
    const bool fwd = bits_[index(i, u, v)] != 0;
    const bool bwd = bits_[index(i, v, u)] != 0;
    auto& link = p.colors[static_cast<std::size_t>(i - 1)];
    link.count = int{fwd} + int{bwd};
    link.forward = fwd && !bwd;
  }
  return p;
}

int ColoredDigraph::pair_total(Vertex u, Vertex v) const {
  int t = 0;
  for (Color i = 1; i <= c_; ++i) t += bits_[index(i, u, v)] + bits_[index(i, v, u)];
  return t;
}

bool ColoredDigraph::is_oriented() const {
  for (Color i = 1; i <= c_; ++i)
    for (Vertex a = 0; a < n_; ++a)
      for (Vertex b = a + 1; b < n_; ++b)
        if (bits_[index(i, a, b)] && bits_[index(i, b, a)]) return false;
  return true;
}

ColoredDigraph ColoredDigraph::induced(std::span<const Vertex> S) const {
  for (Vertex s : S) check_vertex(s);
  const int m = static_cast<int>(S.size());
  ColoredDigraph out(m, c_);
  for (Color i = 1; i <= c_; ++i)
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b)
        if (a != b) out.bits_[out.index(i, a, b)] = bits_[index(i, S[a], S[b])];
  return out;
}

std::vector<EdgeRef> ColoredDigraph::edges() const {
  std::vector<EdgeRef> out;
  for (Color i = 1; i <= c_; ++i)
    for (Vertex a = 0; a < n_; ++a)
      for (Vertex b = 0; b < n_; ++b)
        if (bits_[index(i, a, b)]) out.push_back({i, a, b});
  return out;
}

GraphBuilder::GraphBuilder(int n, int c) : g_(n, c) {}

GraphBuilder::GraphBuilder(ColoredDigraph start) : g_(std::move(start)) {}

GraphBuilder& GraphBuilder::add_edge(EdgeRef e) {
  g_.check_color(e.color);
  g_.check_vertex(e.from);
  g_.check_vertex(e.to);
  if (e.from == e.to) throw InputError("loops are not allowed");
  g_.bits_[g_.index(e.color, e.from, e.to)] = 1;
  return *this;
}

GraphBuilder& GraphBuilder::add_double(Color color, Vertex u, Vertex v) {
  add_edge({color, u, v});
  return add_edge({color, v, u});
}

ColoredDigraph add_edge(const ColoredDigraph& g, EdgeRef e) {
  GraphBuilder b(g);
  b.add_edge(e);
  return b.build();
}

}  // namespace rtlab
