#include "rtlab/constructions.hpp"

#include <cmath>
#include <numeric>

namespace rtlab {

namespace {

void require_n(int n) {
  if (n < 0) throw InputError("construction size must be non-negative");
}

void require_c(int c) {
  if (c < 1) throw InputError("construction needs at least one color");
}

std::uint64_t u64(int v) { return static_cast<std::uint64_t>(v); }

// Consecutive vertex ranges for the given part sizes.
std::vector<std::vector<Vertex>> split(const std::vector<int>& sizes) {
  std::vector<std::vector<Vertex>> parts;
  Vertex next = 0;
  for (int s : sizes) {
    std::vector<Vertex> part(static_cast<std::size_t>(s));
    std::iota(part.begin(), part.end(), next);
    next += s;
    parts.push_back(std::move(part));
  }
  return parts;
}

void complete_double(GraphBuilder& b, const std::vector<Vertex>& part, Color color) {
  for (std::size_t x = 0; x < part.size(); ++x)
    for (std::size_t y = x + 1; y < part.size(); ++y) b.add_double(color, part[x], part[y]);
}

}  // namespace

std::string to_string(ConstructionId id) {
  switch (id) {
    case ConstructionId::BipartiteDouble: return "bipartite-double";
    case ConstructionId::Directed3: return "directed3";
    case ConstructionId::Transitive3: return "transitive3";
    case ConstructionId::OrientedCyclic: return "oriented-cyclic";
    case ConstructionId::TwoColorHeavy: return "two-color-heavy";
  }
  return "unknown";
}

std::optional<ConstructionId> parse_construction_id(std::string_view s) {
  for (auto id : {ConstructionId::BipartiteDouble, ConstructionId::Directed3,
                  ConstructionId::Transitive3, ConstructionId::OrientedCyclic,
                  ConstructionId::TwoColorHeavy})
    if (to_string(id) == s) return id;
  return std::nullopt;
}

TriangleKind avoided_pattern(ConstructionId id) {
  switch (id) {
    case ConstructionId::Directed3:
    case ConstructionId::TwoColorHeavy: return TriangleKind::Directed;
    case ConstructionId::Transitive3:
    case ConstructionId::OrientedCyclic: return TriangleKind::Transitive;
    case ConstructionId::BipartiteDouble: break;
  }
  // Triangle-free: avoids both; report the directed one.
  return TriangleKind::Directed;
}

int color_count(const ConstructionSpec& spec) {
  switch (spec.id) {
    case ConstructionId::BipartiteDouble:
    case ConstructionId::OrientedCyclic: return spec.c;
    default: return 3;
  }
}

std::vector<int> balanced_parts(int n, int parts) {
  require_n(n);
  std::vector<int> sizes(static_cast<std::size_t>(parts), n / parts);
  for (int k = 0; k < n % parts; ++k) ++sizes[static_cast<std::size_t>(parts - 1 - k)];
  return sizes;
}

std::vector<int> transitive3_parts(int n) {
  require_n(n);
  // Nearest integer to (4 - sqrt 7)/9 * n, ties toward zero.
  const double exact = (4.0 - std::sqrt(7.0)) / 9.0 * n;
  const double fl = std::floor(exact);
  const int a = static_cast<int>(exact - fl > 0.5 ? fl + 1 : fl);
  return {a, a, n - 2 * a};
}

ColoredDigraph bipartite_double(int n, int c) {
  require_n(n);
  require_c(c);
  const auto parts = split(balanced_parts(n, 2));
  GraphBuilder b(n, c);
  for (Vertex x : parts[0])
    for (Vertex y : parts[1])
      for (Color i = 1; i <= c; ++i) b.add_double(i, x, y);
  return b.build();
}

ColoredDigraph directed3(int n) {
  require_n(n);
  const auto parts = split(balanced_parts(n, 3));
  GraphBuilder b(n, 3);
  for (int p = 0; p < 3; ++p)
    for (Color i = 1; i <= 3; ++i)
      if (i != p + 1) complete_double(b, parts[static_cast<std::size_t>(p)], i);
  for (int p = 0; p < 3; ++p)
    for (int q = p + 1; q < 3; ++q)
      for (Vertex x : parts[static_cast<std::size_t>(p)])
        for (Vertex y : parts[static_cast<std::size_t>(q)])
          for (Color i = 1; i <= 3; ++i) b.add_edge(i, x, y);
  return b.build();
}

ColoredDigraph transitive3(int n) {
  const auto parts = split(transitive3_parts(n));
  const auto& small1 = parts[0];
  const auto& small2 = parts[1];
  const auto& large = parts[2];
  GraphBuilder b(n, 3);
  complete_double(b, large, 1);
  complete_double(b, large, 2);
  complete_double(b, small1, 2);
  complete_double(b, small1, 3);
  complete_double(b, small2, 3);
  complete_double(b, small2, 1);
  for (std::size_t p = 0; p < 3; ++p)
    for (std::size_t q = p + 1; q < 3; ++q)
      for (Vertex x : parts[p])
        for (Vertex y : parts[q]) b.add_double(3, x, y);
  return b.build();
}

ColoredDigraph oriented_cyclic(int n, int c) {
  require_c(c);
  const auto parts = split(balanced_parts(n, 3));
  GraphBuilder b(n, c);
  for (std::size_t p = 0; p < 3; ++p)
    for (Vertex x : parts[p])
      for (Vertex y : parts[(p + 1) % 3])
        for (Color i = 1; i <= c; ++i) b.add_edge(i, x, y);
  return b.build();
}

ColoredDigraph two_color_heavy(int n) {
  require_n(n);
  GraphBuilder b(n, 3);
  for (Vertex x = 0; x < n; ++x)
    for (Vertex y = x + 1; y < n; ++y) {
      b.add_double(1, x, y);
      b.add_double(2, x, y);
    }
  return b.build();
}

ColoredDigraph build_construction(const ConstructionSpec& spec) {
  switch (spec.id) {
    case ConstructionId::BipartiteDouble: return bipartite_double(spec.n, spec.c);
    case ConstructionId::Directed3: return directed3(spec.n);
    case ConstructionId::Transitive3: return transitive3(spec.n);
    case ConstructionId::OrientedCyclic: return oriented_cyclic(spec.n, spec.c);
    case ConstructionId::TwoColorHeavy: return two_color_heavy(spec.n);
  }
  throw InputError("unknown construction id");
}

std::uint64_t expected_count(const ConstructionSpec& spec, Color color) {
  const int c = color_count(spec);
  if (spec.id == ConstructionId::BipartiteDouble || spec.id == ConstructionId::OrientedCyclic)
    require_c(spec.c);
  if (color < 1 || color > c) throw InputError("color outside the construction's range");
  const int n = spec.n;
  require_n(n);
  switch (spec.id) {
    case ConstructionId::BipartiteDouble: {
      const auto s = balanced_parts(n, 2);
      return 2 * u64(s[0]) * u64(s[1]);
    }
    case ConstructionId::Directed3: {
      const auto s = balanced_parts(n, 3);
      std::uint64_t inside = 0;
      for (int p = 0; p < 3; ++p)
        if (p + 1 != color) inside += u64(s[p]) * u64(s[p] > 0 ? s[p] - 1 : 0);
      return inside + u64(s[0]) * u64(s[1]) + u64(s[0]) * u64(s[2]) + u64(s[1]) * u64(s[2]);
    }
    case ConstructionId::Transitive3: {
      const auto s = transitive3_parts(n);
      const std::uint64_t a = u64(s[0]);
      const std::uint64_t b = u64(s[2]);
      const std::uint64_t in_small = a * (a > 0 ? a - 1 : 0);
      const std::uint64_t in_large = b * (b > 0 ? b - 1 : 0);
      if (color == 3) return 2 * in_small + 2 * (2 * a * b + a * a);
      return in_large + in_small;
    }
    case ConstructionId::OrientedCyclic: {
      const auto s = balanced_parts(n, 3);
      return u64(s[0]) * u64(s[1]) + u64(s[1]) * u64(s[2]) + u64(s[2]) * u64(s[0]);
    }
    case ConstructionId::TwoColorHeavy:
      return color == 3 ? 0 : u64(n) * u64(n > 0 ? n - 1 : 0);
  }
  throw InputError("unknown construction id");
}

}  // namespace rtlab
