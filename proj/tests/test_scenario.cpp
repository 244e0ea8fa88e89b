#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "rtlab/scenario.hpp"

using namespace rtlab;
using namespace rtlab::scenario;

namespace {

// ---- naive reference enumerator ------------------------------------------
// Walks every assignment of the non-fixed (color, ordered pair) slots and
// tests each rule straight from its definition.

struct Config {
  int k = 0, cc = 0;
  std::vector<char> on;  // [(color-1) * k * k + from * k + to]

  int n() const { return k; }
  int c() const { return cc; }
  bool has_edge(Color i, int u, int v) const { return on[static_cast<std::size_t>(((i - 1) * k + u) * k + v)]; }

  int colors_between(int u, int v, const std::vector<Color>& colors) const {
    int t = 0;
    for (Color i = 1; i <= cc; ++i) {
      if (!colors.empty() && std::find(colors.begin(), colors.end(), i) == colors.end()) continue;
      t += has_edge(i, u, v) + has_edge(i, v, u);
    }
    return t;
  }
  int total(int u, int v) const { return colors_between(u, v, {}); }
  int doubles(int u, int v) const {
    int d = 0;
    for (Color i = 1; i <= cc; ++i) d += has_edge(i, u, v) && has_edge(i, v, u);
    return d;
  }
  int out(int u, int v) const {
    int d = 0;
    for (Color i = 1; i <= cc; ++i) d += has_edge(i, u, v);
    return d;
  }
  bool touches(int u, int v, Color i) const { return has_edge(i, u, v) || has_edge(i, v, u); }
};

bool matches_type(const Config& g, int u, int v, const PairType& t) {
  auto mult = [&](Color i) { return int(g.has_edge(i, u, v)) + int(g.has_edge(i, v, u)); };
  switch (t.kind) {
    case PairKind::X: {
      const Color k = 6 - t.i - t.j;
      return mult(t.i) == 2 && mult(t.j) == 2 && mult(k) <= 1;
    }
    case PairKind::Y: {
      if (g.total(u, v) != 4 || mult(t.i) != 2) return false;
      for (Color i = 1; i <= 3; ++i)
        if (i != t.i && mult(i) != 1) return false;
      return true;
    }
    case PairKind::Z: {
      if (g.total(u, v) != 3 || mult(t.i) != 2) return false;
      return g.doubles(u, v) == 1;
    }
    case PairKind::R:
    case PairKind::Free: return true;
  }
  return true;
}

bool in_class_naive(const Config& g, int u, int v, PairClass cls) {
  switch (cls) {
    case PairClass::DoubleDouble: return g.doubles(u, v) >= 2;
    case PairClass::FourEdges: return g.total(u, v) == 4;
    case PairClass::DoubleSingle: return g.doubles(u, v) == 1 && g.total(u, v) == 3;
  }
  return false;
}

std::vector<VertexPair> listed_or_all(const std::vector<VertexPair>& pairs, int k) {
  if (!pairs.empty()) return pairs;
  std::vector<VertexPair> all;
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b) all.push_back({a, b});
  return all;
}

bool satisfies(const Config& g, const Scenario& s) {
  const int k = g.k;
  for (const Group& gr : s.groups)
    if (gr.vertices.size() == 2 && !matches_type(g, gr.vertices[0], gr.vertices[1], gr.type)) return false;
  for (const Constraint& con : s.constraints) {
    bool ok = true;
    std::visit(
        [&](const auto& r) {
          using T = std::decay_t<decltype(r)>;
          if constexpr (std::is_same_v<T, rule::NoRainbow>) {
            ok = !oracle::has_rainbow(g, r.pattern);
          } else if constexpr (std::is_same_v<T, rule::MaxPairEdges>) {
            for (auto [a, b] : listed_or_all(r.pairs, k)) ok = ok && g.total(a, b) <= r.max;
          } else if constexpr (std::is_same_v<T, rule::MaxDoubles>) {
            for (auto [a, b] : listed_or_all(r.pairs, k)) ok = ok && g.doubles(a, b) <= r.max;
          } else if constexpr (std::is_same_v<T, rule::ForbidClass>) {
            for (auto [a, b] : listed_or_all(r.pairs, k)) ok = ok && !in_class_naive(g, a, b, r.cls);
          } else if constexpr (std::is_same_v<T, rule::AtMostOne>) {
            ok = !(in_class_naive(g, r.vertex, r.pair.first, r.cls) &&
                   in_class_naive(g, r.vertex, r.pair.second, r.cls));
          } else if constexpr (std::is_same_v<T, rule::PairEdges>) {
            const int e = g.colors_between(r.pair.first, r.pair.second, r.colors);
            ok = e >= r.min && (!r.max || e <= *r.max);
          } else if constexpr (std::is_same_v<T, rule::MinDirected>) {
            ok = g.out(r.from, r.to) >= r.min;
          } else if constexpr (std::is_same_v<T, rule::Oriented>) {
            for (int a = 0; a < k; ++a)
              for (int b = a + 1; b < k; ++b) ok = ok && g.doubles(a, b) == 0;
          } else if constexpr (std::is_same_v<T, rule::NoCommonColor>) {
            for (Color i = 1; i <= g.cc; ++i) {
              if (!r.colors.empty() && std::find(r.colors.begin(), r.colors.end(), i) == r.colors.end())
                continue;
              ok = ok && !(g.touches(r.first.first, r.first.second, i) &&
                           g.touches(r.second.first, r.second.second, i));
            }
          } else if constexpr (std::is_same_v<T, rule::NoThickPath>) {
            for (int p = 0; p < k; ++p)
              for (int q = 0; q < k; ++q)
                for (int x = 0; x < k; ++x)
                  if (p != q && q != x && p != x && g.out(p, q) >= 3 && g.out(q, x) >= 3) ok = false;
          }
        },
        con);
    if (!ok) return false;
  }
  return true;
}

int objective_of(const Config& g, const Scenario& s) {
  int t = 0;
  for (int a : s.objective.side_a)
    for (int b : s.objective.side_b)
      for (Color i : s.objective.colors) t += g.has_edge(i, a, b) + g.has_edge(i, b, a);
  return t;
}

struct NaiveResult {
  bool feasible = false;
  int max = -1;
};

int free_slot_count(const Scenario& s) {
  const int k = static_cast<int>(s.vertices.size());
  std::map<std::tuple<int, int, int>, bool> fixed;
  for (const auto& e : s.fixed_edges) fixed[{e.color, e.from, e.to}] = e.present;
  return s.c * k * (k - 1) - static_cast<int>(fixed.size());
}

NaiveResult naive_max(const Scenario& s) {
  const int k = static_cast<int>(s.vertices.size());
  Config g{k, s.c, std::vector<char>(static_cast<std::size_t>(s.c * k * k), 0)};
  std::vector<std::size_t> free;
  std::vector<char> fixed(g.on.size(), 0);
  for (const auto& e : s.fixed_edges) {
    const auto idx = static_cast<std::size_t>(((e.color - 1) * k + e.from) * k + e.to);
    fixed[idx] = 1;
    g.on[idx] = e.present;
  }
  for (Color i = 1; i <= s.c; ++i)
    for (int u = 0; u < k; ++u)
      for (int v = 0; v < k; ++v) {
        const auto idx = static_cast<std::size_t>(((i - 1) * k + u) * k + v);
        if (u != v && !fixed[idx]) free.push_back(idx);
      }
  REQUIRE(free.size() <= 20);
  NaiveResult r;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << free.size()); ++bits) {
    for (std::size_t t = 0; t < free.size(); ++t) g.on[free[t]] = (bits >> t) & 1;
    if (!satisfies(g, s)) continue;
    r.feasible = true;
    r.max = std::max(r.max, objective_of(g, s));
  }
  return r;
}

// ---- scenario helpers ------------------------------------------------------

Scenario bare(int k, int c) {
  Scenario s;
  s.id = "test";
  s.c = c;
  for (int v = 0; v < k; ++v) s.vertices.push_back("v" + std::to_string(v));
  s.bound = {100, 1};
  return s;
}

const Scenario& find_case(const std::vector<Scenario>& cat, const std::string& id) {
  auto it = std::find_if(cat.begin(), cat.end(), [&](const Scenario& s) { return s.id == id; });
  REQUIRE(it != cat.end());
  return *it;
}

int entry_max(const std::vector<Scenario>& cat, const std::string& entry) {
  int best = -1;
  for (const auto& s : cat)
    if (s.entry_id() == entry) {
      const auto r = enumerate_max(s);
      if (r.feasible) best = std::max(best, r.max);
    }
  return best;
}

Scenario random_scenario(std::mt19937_64& rng) {
  auto pick = [&](int n) { return static_cast<int>(rng() % static_cast<std::uint64_t>(n)); };
  const int shape = pick(3);
  const int k = shape == 2 ? 4 : 3;
  const int c = shape == 0 ? 3 : (shape == 1 ? 2 : 1);
  Scenario s = bare(k, c);
  auto rand_pair = [&] {
    int a = pick(k), b = pick(k - 1);
    if (b >= a) ++b;
    return VertexPair{a, b};
  };
  auto rand_colors = [&] {
    std::vector<Color> cs;
    for (Color i = 1; i <= c; ++i)
      if (rng() & 1) cs.push_back(i);
    return cs;
  };

  if (c == 3 && pick(2)) {
    static const char* kTypes[] = {"X12", "X13", "X23", "Y1", "Y2", "Y3", "Z1", "Z2", "Z3"};
    s.groups.push_back({"P", *parse_pair_type(kTypes[pick(9)]), {0, 1}});
    if (pick(2)) s.groups.push_back({"Q", {PairKind::R, 0, 0}, {2}});
  }
  const int fixed = pick(3);
  for (int f = 0; f < fixed; ++f) {
    const auto [a, b] = rand_pair();
    const Color col = 1 + pick(c);
    const bool present = pick(2);
    bool clash = false;
    for (const auto& e : s.fixed_edges)
      if (e.color == col && e.from == a && e.to == b) clash = true;
    if (!clash) s.fixed_edges.push_back({col, a, b, present});
  }
  const int rules = 1 + pick(3);
  for (int t = 0; t < rules; ++t) {
    switch (pick(10)) {
      case 0: s.constraints.push_back(rule::NoRainbow{pick(2) ? TriangleKind::Directed : TriangleKind::Transitive}); break;
      case 1: s.constraints.push_back(rule::MaxPairEdges{1 + pick(2 * c), pick(2) ? std::vector<VertexPair>{} : std::vector<VertexPair>{rand_pair()}}); break;
      case 2: s.constraints.push_back(rule::MaxDoubles{pick(c), {}}); break;
      case 3: s.constraints.push_back(rule::ForbidClass{static_cast<PairClass>(pick(3)), {rand_pair()}}); break;
      case 4: {
        if (k < 3) break;
        s.constraints.push_back(rule::AtMostOne{static_cast<PairClass>(pick(3)), 2, {0, 1}});
        break;
      }
      case 5: {
        rule::PairEdges pe{rand_pair(), rand_colors(), pick(3), std::nullopt};
        if (pick(2)) pe.max = pe.min + pick(4);
        s.constraints.push_back(pe);
        break;
      }
      case 6: {
        const auto [a, b] = rand_pair();
        s.constraints.push_back(rule::MinDirected{a, b, pick(c + 1)});
        break;
      }
      case 7: s.constraints.push_back(rule::Oriented{}); break;
      case 8: s.constraints.push_back(rule::NoCommonColor{rand_pair(), rand_pair(), rand_colors()}); break;
      case 9: s.constraints.push_back(rule::NoThickPath{}); break;
    }
  }
  s.objective.colors = rand_colors();
  if (s.objective.colors.empty()) s.objective.colors = {1};
  if (k == 4 && pick(2)) {
    s.objective.side_a = {0, 1};
    s.objective.side_b = {2, 3};
  } else {
    s.objective.side_a = {pick(2) ? 0 : 2};
    s.objective.side_b = {1};
  }
  return s;
}

Scenario permute_colors(Scenario s, const std::vector<Color>& sigma) {
  auto map = [&](Color i) { return sigma[static_cast<std::size_t>(i - 1)]; };
  for (auto& g : s.groups) {
    if (g.type.kind == PairKind::X) {
      const Color a = map(g.type.i), b = map(g.type.j);
      g.type.i = std::min(a, b);
      g.type.j = std::max(a, b);
    } else if (g.type.kind == PairKind::Y || g.type.kind == PairKind::Z) {
      g.type.i = map(g.type.i);
    }
  }
  for (auto& e : s.fixed_edges) e.color = map(e.color);
  for (auto& col : s.objective.colors) col = map(col);
  for (auto& con : s.constraints) {
    if (auto* r = std::get_if<rule::PairEdges>(&con))
      for (auto& col : r->colors) col = map(col);
    if (auto* r = std::get_if<rule::NoCommonColor>(&con))
      for (auto& col : r->colors) col = map(col);
  }
  return s;
}

}  // namespace

TEST_CASE("documented examples") {
  const auto table = builtin_catalogue("table10x10");
  const auto rr = enumerate_max(find_case(table, "table/R-R"));
  CHECK(rr.feasible);
  CHECK(rr.max == 3);

  const auto pairs = builtin_catalogue("pair_sum_bounds");
  const auto xx = enumerate_max(find_case(pairs, "pair_sum/X_ij-X_ij/c12/X12-X12"));
  CHECK(xx.max == 16);

  const auto local = builtin_catalogue("local_claims");
  CHECK(entry_max(local, "local/third-color-double") == 4);
  CHECK(entry_max(local, "local/third-color-single") == 6);
  CHECK(entry_max(local, "local/thick-path-neighbour/c3") == 6);
}

TEST_CASE("witnesses attain the reported maximum") {
  for (const auto& name : builtin_catalogue_names()) {
    const auto cat = builtin_catalogue(name);
    for (std::size_t t = 0; t < cat.size(); t += 7) {
      const auto& s = cat[t];
      const auto r = enumerate_max(s);
      if (!r.feasible) continue;
      const int k = static_cast<int>(s.vertices.size());
      Config g{k, s.c, std::vector<char>(static_cast<std::size_t>(s.c * k * k), 0)};
      for (const auto& e : r.witness.edges())
        g.on[static_cast<std::size_t>(((e.color - 1) * k + e.from) * k + e.to)] = 1;
      CAPTURE(s.id);
      CHECK(satisfies(g, s));
      CHECK(objective_of(g, s) == r.max);
      for (const auto& e : s.fixed_edges) CHECK(r.witness.has_edge(e.color, e.from, e.to) == e.present);
    }
  }
}

TEST_CASE("shipped cases within 20 free slots agree with the naive enumerator") {
  int compared = 0;
  for (const auto& name : builtin_catalogue_names())
    for (const auto& s : builtin_catalogue(name)) {
      if (free_slot_count(s) > 20) continue;
      const auto fast = enumerate_max(s);
      const auto slow = naive_max(s);
      CAPTURE(s.id);
      CHECK(fast.feasible == slow.feasible);
      if (slow.feasible) CHECK(fast.max == slow.max);
      ++compared;
    }
  // Every block-versus-R cell and the R-R cell is small enough.
  CHECK(compared >= 19);
}

TEST_CASE("random scenarios agree with the naive enumerator") {
  std::mt19937_64 rng(99);
  int feasible = 0, infeasible = 0;
  for (int trial = 0; trial < 120; ++trial) {
    const Scenario s = random_scenario(rng);
    validate(s);
    const auto fast = enumerate_max(s);
    const auto slow = naive_max(s);
    CAPTURE(trial);
    REQUIRE(fast.feasible == slow.feasible);
    if (slow.feasible) {
      CHECK(fast.max == slow.max);
      ++feasible;
    } else {
      ++infeasible;
    }
  }
  CHECK(feasible > 50);
  CHECK(infeasible > 0);
}

TEST_CASE("infeasibility is reported apart from a zero maximum") {
  Scenario s = bare(2, 1);
  s.fixed_edges.push_back({1, 0, 1, true});
  s.constraints.push_back(rule::PairEdges{{0, 1}, {}, 0, 0});
  s.objective = {{1}, {0}, {1}};
  const auto r = enumerate_max(s);
  CHECK_FALSE(r.feasible);

  Scenario z = bare(2, 1);
  z.constraints.push_back(rule::PairEdges{{0, 1}, {}, 0, 0});
  z.objective = {{1}, {0}, {1}};
  const auto rz = enumerate_max(z);
  CHECK(rz.feasible);
  CHECK(rz.max == 0);

  s.bound = {1, 1};
  const auto entries = run_catalogue({s});
  REQUIRE(entries.size() == 1);
  CHECK_FALSE(entries[0].computed);
  CHECK(entries[0].status == BoundStatus::Verified);
}

TEST_CASE("color permutations preserve maxima") {
  const auto table = builtin_catalogue("table10x10");
  const std::vector<std::vector<Color>> perms{{2, 1, 3}, {3, 1, 2}};
  for (std::size_t t = 0; t < table.size(); t += 3) {
    const auto base = enumerate_max(table[t]).max;
    for (const auto& p : perms) {
      CAPTURE(table[t].id);
      CHECK(enumerate_max(permute_colors(table[t], p)).max == base);
    }
  }
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 40; ++trial) {
    const Scenario s = random_scenario(rng);
    if (s.c < 2) continue;
    std::vector<Color> sigma(static_cast<std::size_t>(s.c));
    std::iota(sigma.begin(), sigma.end(), 1);
    std::swap(sigma[0], sigma[1]);
    const auto a = enumerate_max(s), b = enumerate_max(permute_colors(s, sigma));
    CHECK(a.feasible == b.feasible);
    if (a.feasible) CHECK(a.max == b.max);
  }
}

TEST_CASE("union objectives are sub-additive") {
  std::mt19937_64 rng(12);
  int checked = 0;
  for (int trial = 0; trial < 80 && checked < 25; ++trial) {
    Scenario s = random_scenario(rng);
    if (s.c < 2) continue;
    s.objective.colors.clear();
    for (Color i = 1; i <= s.c; ++i) s.objective.colors.push_back(i);
    const auto whole = enumerate_max(s);
    if (!whole.feasible) continue;
    Scenario left = s, right = s;
    left.objective.colors = {1};
    right.objective.colors.erase(right.objective.colors.begin());
    CHECK(whole.max <= enumerate_max(left).max + enumerate_max(right).max);
    ++checked;
  }
  CHECK(checked > 10);
}

TEST_CASE("pair type profiles follow the definitions") {
  static const char* kTypes[] = {"X12", "X13", "X23", "Y1", "Y2", "Y3", "Z1", "Z2", "Z3"};
  for (const char* name : kTypes) {
    const PairType t = *parse_pair_type(name);
    CHECK(to_string(t) == name);
    const auto profiles = pair_type_profiles(t);
    CHECK(profiles.size() == (t.kind == PairKind::X ? 3u : 4u));
    // Exactly the 2-vertex, 3-color configurations matching the definition.
    std::size_t matching = 0;
    for (std::uint32_t bits = 0; bits < 64; ++bits) {
      Config g{2, 3, std::vector<char>(12, 0)};
      for (Color i = 1; i <= 3; ++i) {
        g.on[static_cast<std::size_t>(((i - 1) * 2 + 0) * 2 + 1)] = (bits >> (2 * (i - 1))) & 1;
        g.on[static_cast<std::size_t>(((i - 1) * 2 + 1) * 2 + 0)] = (bits >> (2 * (i - 1) + 1)) & 1;
      }
      const bool want = matches_type(g, 0, 1, t);
      const bool got = std::find(profiles.begin(), profiles.end(), bits) != profiles.end();
      CHECK(want == got);
      matching += want;
    }
    CHECK(matching == profiles.size());
  }
  CHECK_FALSE(parse_pair_type("X21"));
  CHECK_FALSE(parse_pair_type("Y4"));
  CHECK(parse_pair_type("R")->kind == PairKind::R);
}

TEST_CASE("rational bounds and status") {
  CHECK(Rational{40, 3}.floor() == 13);
  CHECK(Rational{-7, 2}.floor() == -4);
  CHECK(Rational{11, 2}.str() == "11/2");
  CHECK(compare(13, {40, 3}) < 0);
  CHECK(compare(14, {40, 3}) > 0);
  CHECK(compare(6, {12, 2}) == 0);
  CHECK(derive_status(13, {40, 3}) == BoundStatus::Tight);
  CHECK(derive_status(12, {40, 3}) == BoundStatus::Verified);
  CHECK(derive_status(14, {40, 3}) == BoundStatus::Violated);
  CHECK(derive_status(std::nullopt, {1, 1}) == BoundStatus::Verified);
}

TEST_CASE("malformed scenarios are rejected") {
  auto ok = [] {
    Scenario s = bare(3, 3);
    s.objective = {{1}, {0}, {1}};
    return s;
  };
  CHECK_NOTHROW(validate(ok()));

  Scenario s = ok();
  s.id.clear();
  CHECK_THROWS_AS(validate(s), InputError);
  s = ok();
  s.c = 6;
  CHECK_THROWS_AS(validate(s), InputError);
  s = ok();
  s.fixed_edges = {{1, 0, 1, true}, {1, 0, 1, false}};
  CHECK_THROWS_AS(validate(s), InputError);
  s = ok();
  s.fixed_edges = {{4, 0, 1, true}};
  CHECK_THROWS_AS(validate(s), InputError);
  s = ok();
  s.objective.side_b = {0};
  CHECK_THROWS_AS(validate(s), InputError);
  s = ok();
  s.objective.colors.clear();
  CHECK_THROWS_AS(validate(s), InputError);
  s = ok();
  s.groups = {{"P", *parse_pair_type("X12"), {0}}};
  CHECK_THROWS_AS(validate(s), InputError);
  s = ok();
  s.groups = {{"P", *parse_pair_type("Y1"), {0, 1}}, {"Q", {PairKind::R, 0, 0}, {1}}};
  CHECK_THROWS_AS(validate(s), InputError);
  s = ok();
  s.constraints.push_back(rule::AtMostOne{PairClass::FourEdges, 0, {0, 1}});
  CHECK_THROWS_AS(validate(s), InputError);
  s = ok();
  s.bound = {1, 0};
  CHECK_THROWS_AS(validate(s), InputError);
  s = bare(6, 3);
  s.objective = {{1}, {0}, {1}};
  CHECK_THROWS_AS(validate(s), InputError);  // 90 free slots

  s = ok();
  Scenario other = ok();
  other.bound = {5, 1};
  CHECK_THROWS_AS(run_catalogue({s, other}), InputError);
}

TEST_CASE("builtin catalogue shapes") {
  CHECK(builtin_catalogue_names() ==
        std::vector<std::string>{"table10x10", "pair_sum_bounds", "total_bounds", "local_claims"});
  CHECK(builtin_catalogue("table10x10").size() == 100);
  CHECK_THROWS_AS(builtin_catalogue("nope"), InputError);
  for (const auto& name : builtin_catalogue_names())
    for (const auto& s : builtin_catalogue(name)) CHECK_NOTHROW(validate(s));
}
