#include <doctest.h>

#include <cmath>
#include <cstdint>

#include "oracles.hpp"
#include "rtlab/constructions.hpp"
#include "rtlab/optcheck.hpp"
#include "rtlab/patterns.hpp"

using namespace rtlab;
using optcheck::QuadraticRational;
using optcheck::Rational;

namespace {

using u64 = std::uint64_t;

// Part k of an as-equal-as-possible split, larger parts last.
u64 part(int n, int parts, int k) {
  return static_cast<u64>(n / parts + (k >= parts - n % parts ? 1 : 0));
}

u64 small_part(int n) {
  return static_cast<u64>(std::llround((4.0 - std::sqrt(7.0)) / 9.0 * n));
}

// Per-color counts from the construction definitions, not the library formulas.
u64 reference_count(ConstructionId id, int n, Color i) {
  switch (id) {
    case ConstructionId::BipartiteDouble: return 2 * part(n, 2, 0) * part(n, 2, 1);
    case ConstructionId::Directed3: {
      u64 total = 0;
      for (int k = 0; k < 3; ++k) {
        const u64 p = part(n, 3, k);
        if (k + 1 != i && p > 0) total += p * (p - 1);
        for (int l = k + 1; l < 3; ++l) total += p * part(n, 3, l);
      }
      return total;
    }
    case ConstructionId::Transitive3: {
      const u64 a = small_part(n), b = static_cast<u64>(n) - 2 * a;
      const u64 sa = a ? a * (a - 1) : 0, sb = b ? b * (b - 1) : 0;
      if (i == 3) return 2 * sa + 2 * (a * a + 2 * a * b);
      return sa + sb;
    }
    case ConstructionId::OrientedCyclic: {
      const u64 p0 = part(n, 3, 0), p1 = part(n, 3, 1), p2 = part(n, 3, 2);
      return p0 * p1 + p1 * p2 + p2 * p0;
    }
    case ConstructionId::TwoColorHeavy:
      return i == 3 || n == 0 ? 0 : static_cast<u64>(n) * static_cast<u64>(n - 1);
  }
  return 0;
}

QuadraticRational q(std::int64_t a, std::int64_t b, std::int64_t den) {
  return {Rational(a, den), Rational(b, den)};
}

// Per-color threshold coefficient of n^2 and linear slack (times 2) for each generator.
QuadraticRational coefficient(ConstructionId id) {
  switch (id) {
    case ConstructionId::BipartiteDouble: return q(1, 0, 2);
    case ConstructionId::Directed3: return q(5, 0, 9);
    case ConstructionId::Transitive3: return q(52, -4, 81);
    case ConstructionId::OrientedCyclic: return q(1, 0, 3);
    case ConstructionId::TwoColorHeavy: return q(1, 0, 1);
  }
  return {};
}

struct Case {
  ConstructionId id;
  int c;
};

const Case kCases[] = {
    {ConstructionId::BipartiteDouble, 3}, {ConstructionId::BipartiteDouble, 4},
    {ConstructionId::BipartiteDouble, 5}, {ConstructionId::Directed3, 3},
    {ConstructionId::Transitive3, 3},     {ConstructionId::OrientedCyclic, 3},
    {ConstructionId::OrientedCyclic, 4},  {ConstructionId::TwoColorHeavy, 3},
};

}  // namespace

TEST_CASE("documented examples") {
  CHECK(bipartite_double(4, 4).count_color(1) == 8);
  CHECK(bipartite_double(5, 4).count_color(4) == 12);
  CHECK(directed3(9).count_color(2) == 39);
  CHECK(directed3(3).count_color(1) == 3);
  CHECK(oriented_cyclic(6, 3).count_color(3) == 12);
  CHECK(oriented_cyclic(6, 3).is_oriented());
  CHECK(transitive3(0).n() == 0);
  CHECK(transitive3(0).count_total() == 0);

  const auto heavy = two_color_heavy(5);
  CHECK(heavy.count_color(1) == 20);
  CHECK(heavy.count_color(2) == 20);
  CHECK(heavy.count_color(3) == 0);
  CHECK(heavy.count_total() * 2 > 3 * 25);
  CHECK(two_color_heavy(4).count_total() * 2 == 3 * 16);

  CHECK(expected_count({ConstructionId::Directed3, 9, 3}, 1) == 39);
  CHECK(expected_count({ConstructionId::BipartiteDouble, 5, 4}, 2) == 12);
  CHECK(expected_count({ConstructionId::TwoColorHeavy, 5, 3}, 3) == 0);
}

TEST_CASE("pattern freedom and counts for n up to 30") {
  for (const auto& cs : kCases) {
    for (int n = 0; n <= 30; ++n) {
      const ConstructionSpec spec{cs.id, n, cs.c};
      const auto g = build_construction(spec);
      CAPTURE(to_string(cs.id));
      CAPTURE(n);
      REQUIRE(g.n() == n);
      REQUIRE(g.c() == color_count(spec));
      CHECK_FALSE(find_rainbow(g, avoided_pattern(cs.id)));
      for (Color i = 1; i <= g.c(); ++i) {
        CHECK(g.count_color(i) == expected_count(spec, i));
        CHECK(g.count_color(i) == reference_count(cs.id, n, i));
      }
    }
  }
}

TEST_CASE("small constructions agree with the brute-force detector") {
  for (const auto& cs : kCases)
    for (int n = 0; n <= 9; ++n) {
      const auto g = build_construction({cs.id, n, cs.c});
      CHECK_FALSE(oracle::has_rainbow(g, avoided_pattern(cs.id)));
    }
}

TEST_CASE("transitive3 is transitive-free up to 60") {
  for (int n = 31; n <= 60; ++n) CHECK_FALSE(find_rainbow(transitive3(n), TriangleKind::Transitive));
}

TEST_CASE("directed3 still has transitive rainbows") {
  for (int n = 3; n <= 30; ++n) {
    const auto g = directed3(n);
    const auto w = find_rainbow(g, TriangleKind::Transitive);
    REQUIRE(w);
    CHECK(is_valid_witness(g, *w));
  }
}

TEST_CASE("structure of the generators") {
  const auto g = directed3(9);
  // Part A_1 = {0,1,2} is double in colors 2 and 3, part A_3 in colors 1 and 2.
  CHECK(g.has_edge(2, 0, 1));
  CHECK(g.has_edge(2, 1, 0));
  CHECK_FALSE(g.has_edge(1, 0, 1));
  CHECK(g.has_edge(1, 7, 8));
  CHECK_FALSE(g.has_edge(3, 7, 8));
  for (Color i = 1; i <= 3; ++i) {
    CHECK(g.has_edge(i, 0, 8));
    CHECK_FALSE(g.has_edge(i, 8, 0));
  }

  const auto t = transitive3(20);
  const auto parts = transitive3_parts(20);
  REQUIRE(parts.size() == 3);
  CHECK(static_cast<u64>(parts[0]) == small_part(20));
  CHECK(parts[0] == parts[1]);
  CHECK(parts[0] + parts[1] + parts[2] == 20);
  // Cross pairs carry only color 3.
  const int a = parts[0];
  for (Color i = 1; i <= 2; ++i) CHECK_FALSE(t.has_edge(i, 0, a));
  CHECK(t.has_edge(3, 0, a));
  CHECK(t.has_edge(3, a, 0));
  CHECK(t.has_edge(3, 0, 19));

  const auto o = oriented_cyclic(7, 2);
  CHECK(o.is_oriented());
  CHECK(balanced_parts(7, 3) == std::vector<int>{2, 2, 3});
  CHECK(balanced_parts(8, 3) == std::vector<int>{2, 3, 3});
}

TEST_CASE("counts stay below the matching thresholds") {
  for (const auto& cs : kCases) {
    for (int n : {3, 6, 10, 17, 30, 99, 300}) {
      const ConstructionSpec spec{cs.id, n, cs.c};
      const auto coef = coefficient(cs.id);
      for (Color i = 1; i <= color_count(spec); ++i) {
        const auto e = static_cast<std::int64_t>(expected_count(spec, i));
        QuadraticRational limit = coef * QuadraticRational(std::int64_t{n} * n);
        if (cs.id == ConstructionId::Transitive3) limit += QuadraticRational(Rational(3 * n, 2));
        CAPTURE(to_string(cs.id));
        CAPTURE(n);
        CHECK(QuadraticRational(e) <= limit);
      }
    }
  }
}

TEST_CASE("asymptotic ratios at n = 3000") {
  const int n = 3000;
  const double n2 = double(n) * n;
  const struct {
    ConstructionId id;
    int c;
    double target;
  } cases[] = {
      {ConstructionId::BipartiteDouble, 4, 0.5},
      {ConstructionId::Directed3, 3, 5.0 / 9},
      {ConstructionId::Transitive3, 3, (52 - 4 * std::sqrt(7.0)) / 81},
      {ConstructionId::OrientedCyclic, 3, 1.0 / 3},
  };
  for (const auto& cs : cases)
    for (Color i = 1; i <= 3; ++i) {
      const double ratio = double(expected_count({cs.id, n, cs.c}, i)) / n2;
      CHECK(std::abs(ratio - cs.target) < 1e-2);
    }
  // The generator itself, once, at full size.
  const auto g = directed3(n);
  CHECK(g.count_color(1) == expected_count({ConstructionId::Directed3, n, 3}, 1));
}

TEST_CASE("transitive3 at n = 1000 is within 2/n of its constant") {
  const int n = 1000;
  const auto g = transitive3(n);
  const double target = (52 - 4 * std::sqrt(7.0)) / 81;
  for (Color i = 1; i <= 3; ++i)
    CHECK(std::abs(double(g.count_color(i)) / (double(n) * n) - target) <= 2.0 / n);
}

TEST_CASE("ids and errors") {
  for (auto id : {ConstructionId::BipartiteDouble, ConstructionId::Directed3,
                  ConstructionId::Transitive3, ConstructionId::OrientedCyclic,
                  ConstructionId::TwoColorHeavy})
    CHECK(parse_construction_id(to_string(id)) == id);
  CHECK_FALSE(parse_construction_id("figure-1"));
  CHECK(avoided_pattern(ConstructionId::Directed3) == TriangleKind::Directed);
  CHECK(avoided_pattern(ConstructionId::OrientedCyclic) == TriangleKind::Transitive);

  CHECK_THROWS_AS(directed3(-1), InputError);
  CHECK_THROWS_AS(bipartite_double(4, 0), InputError);
  CHECK_THROWS_AS(expected_count({ConstructionId::Directed3, 9, 3}, 4), InputError);
  CHECK_THROWS_AS(expected_count({ConstructionId::BipartiteDouble, 4, 2}, 0), InputError);
  CHECK_THROWS_AS(expected_count({ConstructionId::OrientedCyclic, -3, 3}, 1), InputError);
}
