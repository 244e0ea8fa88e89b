#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rtlab/core.hpp"
#include "rtlab/triangle.hpp"

namespace rtlab {

enum class ConstructionId { BipartiteDouble, Directed3, Transitive3, OrientedCyclic, TwoColorHeavy };

struct ConstructionSpec {
  ConstructionId id = ConstructionId::BipartiteDouble;
  int n = 0;
  int c = 3;  // ignored by the fixed three-color generators
};

std::string to_string(ConstructionId id);
std::optional<ConstructionId> parse_construction_id(std::string_view s);

/// The pattern the construction avoids.
TriangleKind avoided_pattern(ConstructionId id);

/// Colors actually used by the generator for the given spec.
int color_count(const ConstructionSpec& spec);

/// Balanced part sizes, largest parts last.
std::vector<int> balanced_parts(int n, int parts);

/// Sizes (small, small, large) of the three sets of transitive3(n).
std::vector<int> transitive3_parts(int n);

/// Two parts of sizes floor(n/2), ceil(n/2); every cross pair is a double
/// edge in every color.
ColoredDigraph bipartite_double(int n, int c);

/// Three parts; part A_i is complete with double edges in both colors other
/// than i, and every pair from an earlier part to a later one carries a
/// single forward edge in all three colors.
ColoredDigraph directed3(int n);

/// One large set (colors 1, 2) and two small sets (colors {2, 3} and
/// {3, 1}), each complete with double edges; every cross pair is a double
/// edge in color 3.
ColoredDigraph transitive3(int n);

/// Three parts with all edges A1->A2, A2->A3, A3->A1 in every color.
ColoredDigraph oriented_cyclic(int n, int c);

/// Colors 1 and 2 complete with double edges, color 3 empty.
ColoredDigraph two_color_heavy(int n);

ColoredDigraph build_construction(const ConstructionSpec& spec);

/// Closed-form per-color edge count of the generated graph.
std::uint64_t expected_count(const ConstructionSpec& spec, Color color);

}  // namespace rtlab
