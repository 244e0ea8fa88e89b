#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "rtlab/core.hpp"
#include "rtlab/triangle.hpp"

namespace rtlab {

enum class GraphClass { Digraph, Oriented };
enum class Objective { MaxTotal, MaxMin };

std::string to_string(GraphClass g);
std::string to_string(Objective o);
std::optional<GraphClass> parse_graph_class(std::string_view s);
std::optional<Objective> parse_objective(std::string_view s);

/// Extremal question: over all n-vertex, c-color graphs of the given class
/// with no rainbow copy of `pattern`, maximize the total edge count or the
/// smallest per-color edge count.
struct SearchProblem {
  int n = 0;
  int c = 1;
  TriangleKind pattern = TriangleKind::Directed;
  GraphClass graph_class = GraphClass::Digraph;
  Objective objective = Objective::MaxTotal;
};

struct SearchBudget {
  std::uint64_t max_nodes = 0;  // 0: unlimited
  /// Restrict the first vertex pair to profiles that are least under color
  /// permutation. Sound because every objective here is color-symmetric.
  bool color_symmetry = true;
};

struct SearchResult {
  std::int64_t optimum = 0;
  ColoredDigraph witness;
  std::uint64_t explored = 0;
  bool exhaustive = true;  // false: budget ran out, optimum is best found
};

inline constexpr int kMaxSearchColors = 6;

SearchResult solve(const SearchProblem& p, const SearchBudget& budget = {});

std::int64_t objective_value(const SearchProblem& p, const ColoredDigraph& g);

/// True iff g is pattern-free, belongs to the class, and (when given) attains
/// `claimed`. Throws InputError when g's dimensions differ from the problem.
bool verify_witness(const SearchProblem& p, const ColoredDigraph& g,
                    std::optional<std::int64_t> claimed = std::nullopt);

}  // namespace rtlab
