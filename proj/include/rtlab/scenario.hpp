#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "rtlab/core.hpp"
#include "rtlab/profile.hpp"
#include "rtlab/triangle.hpp"

// Declarative local configurations ("scenarios") whose maximum edge count under
// structural constraints is computed by exhaustive enumeration.
namespace rtlab::scenario {

using VertexPair = std::pair<int, int>;

/// Role of a group of scenario vertices in the matching decomposition of a
/// three-colored digraph:
///   X(i,j): a pair with double edges in colors i and j; the third color is
///           absent or a single edge in either direction.
///   Y(i):   a pair with exactly 4 edges: a double edge in color i and one
///           single edge in each other color.
///   Z(i):   a pair with exactly 3 edges: a double edge in color i and one
///           single edge in a different color.
///   R:      a lone leftover vertex.
///   Free:   no structural role.
enum class PairKind { X, Y, Z, R, Free };

struct PairType {
  PairKind kind = PairKind::Free;
  Color i = 0;
  Color j = 0;

  bool operator==(const PairType&) const = default;
};

std::string to_string(const PairType& t);
std::optional<PairType> parse_pair_type(std::string_view s);

/// Intra-pair profiles of a pair type (three colors), stored as (first, second).
std::vector<profile::Profile> pair_type_profiles(const PairType& t);

struct Group {
  std::string name;
  PairType type;
  std::vector<int> vertices;  // two for X/Y/Z, one for R
};

/// Per-pair classes used by maximality rules.
enum class PairClass {
  DoubleDouble,  // double edges in at least two colors
  FourEdges,     // exactly 4 edges
  DoubleSingle,  // exactly 3 edges: one double edge plus one single edge
};

std::string to_string(PairClass c);
std::optional<PairClass> parse_pair_class(std::string_view s);
bool in_class(profile::Profile p, PairClass cls, int c);

namespace rule {

/// No rainbow copy of the pattern on any vertex triple.
struct NoRainbow {
  TriangleKind pattern = TriangleKind::Directed;
};
/// Every listed pair (all pairs when empty) carries at most `max` edges.
struct MaxPairEdges {
  int max = 0;
  std::vector<VertexPair> pairs;
};
/// Every listed pair (all pairs when empty) has double edges in at most `max` colors.
struct MaxDoubles {
  int max = 0;
  std::vector<VertexPair> pairs;
};
/// No listed pair belongs to the class.
struct ForbidClass {
  PairClass cls = PairClass::DoubleDouble;
  std::vector<VertexPair> pairs;
};
/// At most one of (vertex, pair.first), (vertex, pair.second) is in the class.
struct AtMostOne {
  PairClass cls = PairClass::DoubleDouble;
  int vertex = 0;
  VertexPair pair;
};
/// Edge count of the pair in `colors` (all when empty) lies in [min, max].
struct PairEdges {
  VertexPair pair;
  std::vector<Color> colors;
  int min = 0;
  std::optional<int> max;
};
/// At least `min` edges from -> to over all colors.
struct MinDirected {
  int from = 0;
  int to = 0;
  int min = 0;
};
/// No double edge in any color.
struct Oriented {};
/// For every listed color, not both pairs carry an edge of that color.
struct NoCommonColor {
  VertexPair first;
  VertexPair second;
  std::vector<Color> colors;
};
/// No vertices p, q, r with at least 3 edges p->q and at least 3 edges q->r.
struct NoThickPath {};

}  // namespace rule

using Constraint = std::variant<rule::NoRainbow, rule::MaxPairEdges, rule::MaxDoubles,
                                rule::ForbidClass, rule::AtMostOne, rule::PairEdges,
                                rule::MinDirected, rule::Oriented, rule::NoCommonColor,
                                rule::NoThickPath>;

struct FixedEdge {
  Color color = 1;
  int from = 0;
  int to = 0;
  bool present = true;
};

/// Count edges of `colors` between the two disjoint vertex sets.
struct Objective {
  std::vector<Color> colors;
  std::vector<int> side_a;
  std::vector<int> side_b;
};

struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  std::int64_t floor() const;
  std::string str() const;
};

/// integer < / == / > rational, exactly.
int compare(std::int64_t value, const Rational& r);

struct Scenario {
  std::string id;
  std::string entry;  // cases sharing an entry form one bound; defaults to id
  std::string source;
  std::string description;
  int c = 3;
  std::vector<std::string> vertices;
  std::vector<Group> groups;
  std::vector<FixedEdge> fixed_edges;
  std::vector<Constraint> constraints;
  Objective objective;
  Rational bound;

  const std::string& entry_id() const { return entry.empty() ? id : entry; }
};

inline constexpr int kMaxScenarioVertices = 6;
inline constexpr int kMaxScenarioColors = 5;
inline constexpr int kMaxFreeSlots = 48;

/// Throws InputError on a malformed scenario.
void validate(const Scenario& s);

struct EnumerationResult {
  bool feasible = false;
  int max = 0;                 // meaningful when feasible
  ColoredDigraph witness;      // a completion attaining max
  std::uint64_t nodes = 0;
};

/// Exact maximum of the objective over all completions of the free edges that
/// satisfy the pair types, fixed edges and constraints.
EnumerationResult enumerate_max(const Scenario& s);

enum class BoundStatus { Verified, Tight, Violated };
std::string to_string(BoundStatus s);

struct BoundEntry {
  std::string id;
  std::string source;
  Rational bound;
  std::optional<int> computed;  // empty when every case is infeasible
  BoundStatus status = BoundStatus::Verified;
  std::vector<std::string> cases;
  std::string argmax_case;
  ColoredDigraph witness;
  std::uint64_t nodes = 0;
  double seconds = 0;
};

BoundStatus derive_status(std::optional<int> computed, const Rational& bound);

/// Evaluates every scenario (in parallel over `jobs` workers) and folds the
/// cases of each entry into one BoundEntry, in first-appearance order.
std::vector<BoundEntry> run_catalogue(const std::vector<Scenario>& scenarios, int jobs = 1);

bool any_violated(const std::vector<BoundEntry>& entries);

/// Shipped catalogues: "table10x10", "pair_sum_bounds", "total_bounds", "local_claims".
std::vector<std::string> builtin_catalogue_names();
std::vector<Scenario> builtin_catalogue(std::string_view name);

}  // namespace rtlab::scenario
