#include <doctest.h>

#include "oracles.hpp"
#include "rtlab/patterns.hpp"
#include "rtlab/search.hpp"

using namespace rtlab;

namespace {

SearchProblem problem(int n, int c, TriangleKind k, GraphClass g, Objective o) {
  return {n, c, k, g, o};
}

void check_result(const SearchProblem& p, const SearchResult& r) {
  REQUIRE(r.witness.n() == p.n);
  REQUIRE(r.witness.c() == p.c);
  CHECK_FALSE(find_rainbow(r.witness, p.pattern));
  CHECK_FALSE(oracle::has_rainbow(r.witness, p.pattern));
  if (p.graph_class == GraphClass::Oriented) CHECK(r.witness.is_oriented());
  CHECK(objective_value(p, r.witness) == r.optimum);
  CHECK(verify_witness(p, r.witness, r.optimum));
}

// Values frozen after the full enumeration below confirmed them.
struct Golden {
  TriangleKind kind;
  GraphClass cls;
  std::int64_t max_total;
  std::int64_t max_min;
};

const Golden kGolden[] = {
    {TriangleKind::Directed, GraphClass::Digraph, 12, 4},
    {TriangleKind::Directed, GraphClass::Oriented, 9, 3},
    {TriangleKind::Transitive, GraphClass::Digraph, 12, 4},
    {TriangleKind::Transitive, GraphClass::Oriented, 9, 3},
};

}  // namespace

TEST_CASE("trivial optima") {
  const auto a = solve(problem(2, 3, TriangleKind::Directed, GraphClass::Digraph, Objective::MaxTotal));
  CHECK(a.optimum == 3 * 2 * 1);  // c n (n - 1): no vertex triple exists
  CHECK(a.optimum == oracle::full_search(2, 3, TriangleKind::Directed).digraph.max_total);
  CHECK(a.exhaustive);
  const auto b = solve(problem(3, 2, TriangleKind::Transitive, GraphClass::Digraph, Objective::MaxTotal));
  CHECK(b.optimum == 12);
  const auto z = solve(problem(0, 3, TriangleKind::Directed, GraphClass::Digraph, Objective::MaxMin));
  CHECK(z.optimum == 0);
  const auto o = solve(problem(2, 3, TriangleKind::Directed, GraphClass::Oriented, Objective::MaxTotal));
  CHECK(o.optimum == 3);
}

TEST_CASE("n = 3, c = 3 against full enumeration") {
  for (auto kind : {TriangleKind::Directed, TriangleKind::Transitive}) {
    const auto full = oracle::full_search(3, 3, kind);
    for (const auto& g : kGolden) {
      if (g.kind != kind) continue;
      const auto& want = g.cls == GraphClass::Digraph ? full.digraph : full.oriented;
      CHECK(want.max_total == g.max_total);
      CHECK(want.max_min == g.max_min);
      for (auto obj : {Objective::MaxTotal, Objective::MaxMin}) {
        const auto p = problem(3, 3, kind, g.cls, obj);
        const auto r = solve(p);
        CAPTURE(to_string(kind));
        CAPTURE(to_string(g.cls));
        CAPTURE(to_string(obj));
        CHECK(r.exhaustive);
        CHECK(r.optimum == (obj == Objective::MaxTotal ? want.max_total : want.max_min));
        check_result(p, r);
      }
    }
  }
}

TEST_CASE("other small spaces against full enumeration") {
  // n = 3 with two colors, n = 2 with four: 12 and 8 slots.
  for (auto [n, c] : {std::pair{3, 2}, std::pair{2, 4}, std::pair{3, 1}})
    for (auto kind : {TriangleKind::Directed, TriangleKind::Transitive}) {
      const auto full = oracle::full_search(n, c, kind);
      for (auto cls : {GraphClass::Digraph, GraphClass::Oriented}) {
        const auto& want = cls == GraphClass::Digraph ? full.digraph : full.oriented;
        CHECK(solve(problem(n, c, kind, cls, Objective::MaxTotal)).optimum == want.max_total);
        CHECK(solve(problem(n, c, kind, cls, Objective::MaxMin)).optimum == want.max_min);
      }
    }
}

TEST_CASE("larger instances are consistent") {
  for (auto kind : {TriangleKind::Directed, TriangleKind::Transitive})
    for (auto obj : {Objective::MaxTotal, Objective::MaxMin}) {
      std::int64_t prev_d = -1, prev_o = -1;
      for (int n = 2; n <= 4; ++n) {
        const auto pd = problem(n, 3, kind, GraphClass::Digraph, obj);
        const auto po = problem(n, 3, kind, GraphClass::Oriented, obj);
        const auto d = solve(pd);
        const auto o = solve(po);
        check_result(pd, d);
        check_result(po, o);
        CHECK(o.optimum <= d.optimum);
        CHECK(d.optimum >= prev_d);
        CHECK(o.optimum >= prev_o);
        prev_d = d.optimum;
        prev_o = o.optimum;
      }
    }
}

TEST_CASE("known values at n = 4") {
  auto value = [](TriangleKind k, GraphClass g, Objective o) { return solve(problem(4, 3, k, g, o)).optimum; };
  CHECK(value(TriangleKind::Directed, GraphClass::Digraph, Objective::MaxTotal) == 24);
  CHECK(value(TriangleKind::Directed, GraphClass::Digraph, Objective::MaxMin) == 8);
  CHECK(value(TriangleKind::Directed, GraphClass::Oriented, Objective::MaxTotal) == 18);
  CHECK(value(TriangleKind::Directed, GraphClass::Oriented, Objective::MaxMin) == 6);
}

TEST_CASE("color symmetry reduction does not change optima") {
  for (auto kind : {TriangleKind::Directed, TriangleKind::Transitive})
    for (auto cls : {GraphClass::Digraph, GraphClass::Oriented})
      for (auto obj : {Objective::MaxTotal, Objective::MaxMin}) {
        const auto p = problem(3, 3, kind, cls, obj);
        SearchBudget plain;
        plain.color_symmetry = false;
        const auto a = solve(p);
        const auto b = solve(p, plain);
        CHECK(a.optimum == b.optimum);
        CHECK(b.explored >= a.explored);
        check_result(p, b);
      }
}

TEST_CASE("budget exhaustion") {
  const auto p = problem(4, 3, TriangleKind::Directed, GraphClass::Digraph, Objective::MaxMin);
  SearchBudget tight;
  tight.max_nodes = 5;
  const auto r = solve(p, tight);
  CHECK_FALSE(r.exhaustive);
  CHECK(r.optimum <= 8);
  CHECK(r.explored <= 5 + 1);
  if (r.optimum > 0) check_result(p, r);
}

TEST_CASE("witness verification") {
  const auto p = problem(3, 3, TriangleKind::Directed, GraphClass::Oriented, Objective::MaxTotal);
  GraphBuilder b(3, 3);
  b.add_edge(1, 0, 1).add_edge(2, 1, 2).add_edge(3, 2, 0);
  CHECK_FALSE(verify_witness(p, b.build()));
  GraphBuilder d(3, 3);
  d.add_double(1, 0, 1);
  CHECK_FALSE(verify_witness(p, d.build()));
  GraphBuilder ok(3, 3);
  ok.add_edge(1, 0, 1);
  CHECK(verify_witness(p, ok.build(), 1));
  CHECK_FALSE(verify_witness(p, ok.build(), 2));
  CHECK_THROWS_AS(verify_witness(p, GraphBuilder(4, 3).build()), InputError);
  CHECK_THROWS_AS(verify_witness(p, GraphBuilder(3, 2).build()), InputError);
}

TEST_CASE("invalid problems") {
  CHECK_THROWS_AS(solve(problem(-1, 3, TriangleKind::Directed, GraphClass::Digraph, Objective::MaxTotal)),
                  InputError);
  CHECK_THROWS_AS(solve(problem(3, 0, TriangleKind::Directed, GraphClass::Digraph, Objective::MaxTotal)),
                  InputError);
  CHECK_THROWS_AS(solve(problem(3, kMaxSearchColors + 1, TriangleKind::Directed, GraphClass::Digraph,
                                Objective::MaxTotal)),
                  InputError);
  CHECK(parse_graph_class("oriented") == GraphClass::Oriented);
  CHECK(parse_objective("max-min") == Objective::MaxMin);
  CHECK_FALSE(parse_objective("min"));
}
