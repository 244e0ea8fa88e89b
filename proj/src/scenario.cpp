#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <set>
#include <thread>

#include "rtlab/scenario.hpp"

namespace rtlab::scenario {

using profile::Profile;

std::string to_string(const PairType& t) {
  switch (t.kind) {
    case PairKind::X: return "X" + std::to_string(t.i) + std::to_string(t.j);
    case PairKind::Y: return "Y" + std::to_string(t.i);
    case PairKind::Z: return "Z" + std::to_string(t.i);
    case PairKind::R: return "R";
    case PairKind::Free: return "free";
  }
  return "free";
}

std::optional<PairType> parse_pair_type(std::string_view s) {
  auto color = [](char ch) -> Color { return (ch >= '1' && ch <= '3') ? ch - '0' : 0; };
  if (s == "R") return PairType{PairKind::R, 0, 0};
  if (s == "free") return PairType{PairKind::Free, 0, 0};
  if (s.size() == 3 && s[0] == 'X') {
    const Color i = color(s[1]);
    const Color j = color(s[2]);
    if (i && j && i < j) return PairType{PairKind::X, i, j};
  }
  if (s.size() == 2 && (s[0] == 'Y' || s[0] == 'Z')) {
    const Color i = color(s[1]);
    if (i) return PairType{s[0] == 'Y' ? PairKind::Y : PairKind::Z, i, 0};
  }
  return std::nullopt;
}

std::vector<Profile> pair_type_profiles(const PairType& t) {
  using profile::bit;
  auto dbl = [](Color col) { return bit(col, true) | bit(col, false); };
  std::vector<Profile> out;
  switch (t.kind) {
    case PairKind::X: {
      const Color k = 6 - t.i - t.j;
      const Profile base = dbl(t.i) | dbl(t.j);
      out = {base, base | bit(k, true), base | bit(k, false)};
      break;
    }
    case PairKind::Y: {
      std::vector<Color> others;
      for (Color col = 1; col <= 3; ++col)
        if (col != t.i) others.push_back(col);
      for (bool d1 : {true, false})
        for (bool d2 : {true, false})
          out.push_back(dbl(t.i) | bit(others[0], d1) | bit(others[1], d2));
      break;
    }
    case PairKind::Z: {
      for (Color col = 1; col <= 3; ++col) {
        if (col == t.i) continue;
        for (bool d : {true, false}) out.push_back(dbl(t.i) | bit(col, d));
      }
      break;
    }
    case PairKind::R:
    case PairKind::Free: break;
  }
  return out;
}

std::string to_string(PairClass c) {
  switch (c) {
    case PairClass::DoubleDouble: return "double_double";
    case PairClass::FourEdges: return "four_edges";
    case PairClass::DoubleSingle: return "double_single";
  }
  return "double_double";
}

std::optional<PairClass> parse_pair_class(std::string_view s) {
  for (auto c : {PairClass::DoubleDouble, PairClass::FourEdges, PairClass::DoubleSingle})
    if (to_string(c) == s) return c;
  return std::nullopt;
}

bool in_class(Profile p, PairClass cls, int c) {
  const int d = profile::doubles(p, c);
  const int e = profile::edges(p);
  switch (cls) {
    case PairClass::DoubleDouble: return d >= 2;
    case PairClass::FourEdges: return e == 4;
    case PairClass::DoubleSingle: return d == 1 && e == 3;
  }
  return false;
}

std::int64_t Rational::floor() const {
  std::int64_t q = num / den;
  if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
  return q;
}

std::string Rational::str() const {
  return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

int compare(std::int64_t value, const Rational& r) {
  // den > 0 is enforced by validate().
  const __int128 lhs = static_cast<__int128>(value) * r.den;
  const __int128 rhs = r.num;
  return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
}

namespace {

void check(bool ok, const Scenario& s, const std::string& what) {
  if (!ok) throw InputError("scenario '" + s.id + "': " + what);
}

}  // namespace

void validate(const Scenario& s) {
  const int k = static_cast<int>(s.vertices.size());
  check(!s.id.empty(), s, "missing id");
  check(s.c >= 1 && s.c <= kMaxScenarioColors, s, "color count outside 1..5");
  check(k >= 1 && k <= kMaxScenarioVertices, s, "vertex count outside 1..6");
  auto vertex_ok = [&](int v) { return v >= 0 && v < k; };
  auto color_ok = [&](Color col) { return col >= 1 && col <= s.c; };
  auto pair_ok = [&](const VertexPair& p) {
    return vertex_ok(p.first) && vertex_ok(p.second) && p.first != p.second;
  };

  std::set<int> grouped;
  for (const Group& g : s.groups) {
    const std::size_t want = g.type.kind == PairKind::R ? 1 : 2;
    if (g.type.kind != PairKind::Free)
      check(g.vertices.size() == want, s, "group " + g.name + " has the wrong size");
    if (g.type.kind == PairKind::X || g.type.kind == PairKind::Y || g.type.kind == PairKind::Z)
      check(s.c == 3, s, "pair types need exactly three colors");
    for (int v : g.vertices) {
      check(vertex_ok(v), s, "group " + g.name + " references a missing vertex");
      check(grouped.insert(v).second, s, "vertex in more than one group");
    }
    if (g.vertices.size() == 2) check(g.vertices[0] != g.vertices[1], s, "degenerate pair");
  }

  std::map<std::tuple<int, int, int>, bool> seen;
  int fixed_count = 0;
  for (const FixedEdge& e : s.fixed_edges) {
    check(color_ok(e.color) && vertex_ok(e.from) && vertex_ok(e.to) && e.from != e.to, s,
          "bad fixed edge");
    auto [it, inserted] = seen.emplace(std::tuple{e.color, e.from, e.to}, e.present);
    check(inserted || it->second == e.present, s, "contradictory fixed edges");
    if (inserted) ++fixed_count;
  }

  for (const Constraint& con : s.constraints) {
    std::visit(
        [&](const auto& r) {
          using T = std::decay_t<decltype(r)>;
          if constexpr (std::is_same_v<T, rule::MaxPairEdges> || std::is_same_v<T, rule::MaxDoubles> ||
                        std::is_same_v<T, rule::ForbidClass>) {
            for (const auto& p : r.pairs) check(pair_ok(p), s, "constraint references a bad pair");
          } else if constexpr (std::is_same_v<T, rule::AtMostOne>) {
            check(pair_ok(r.pair) && vertex_ok(r.vertex) && r.vertex != r.pair.first &&
                      r.vertex != r.pair.second,
                  s, "bad at_most_one constraint");
          } else if constexpr (std::is_same_v<T, rule::PairEdges>) {
            check(pair_ok(r.pair), s, "bad pair_edges pair");
            for (Color col : r.colors) check(color_ok(col), s, "bad pair_edges color");
          } else if constexpr (std::is_same_v<T, rule::MinDirected>) {
            check(pair_ok({r.from, r.to}), s, "bad min_directed pair");
          } else if constexpr (std::is_same_v<T, rule::NoCommonColor>) {
            check(pair_ok(r.first) && pair_ok(r.second), s, "bad no_common_color pairs");
            for (Color col : r.colors) check(color_ok(col), s, "bad no_common_color color");
          }
        },
        con);
  }

  check(!s.objective.side_a.empty() && !s.objective.side_b.empty(), s, "objective sides empty");
  for (Color col : s.objective.colors) check(color_ok(col), s, "bad objective color");
  check(!s.objective.colors.empty(), s, "objective has no colors");
  for (int v : s.objective.side_a) {
    check(vertex_ok(v), s, "bad objective vertex");
    check(std::find(s.objective.side_b.begin(), s.objective.side_b.end(), v) ==
              s.objective.side_b.end(),
          s, "objective sides overlap");
  }
  for (int v : s.objective.side_b) check(vertex_ok(v), s, "bad objective vertex");
  check(s.bound.den > 0, s, "bound denominator must be positive");

  const int slots = s.c * k * (k - 1) - fixed_count;
  check(slots <= kMaxFreeSlots, s, "too many free edge slots");
}

std::string to_string(BoundStatus s) {
  switch (s) {
    case BoundStatus::Verified: return "verified";
    case BoundStatus::Tight: return "tight";
    case BoundStatus::Violated: return "violated";
  }
  return "verified";
}

BoundStatus derive_status(std::optional<int> computed, const Rational& bound) {
  if (!computed) return BoundStatus::Verified;
  if (compare(*computed, bound) > 0) return BoundStatus::Violated;
  if (*computed == bound.floor()) return BoundStatus::Tight;
  return BoundStatus::Verified;
}

std::vector<BoundEntry> run_catalogue(const std::vector<Scenario>& scenarios, int jobs) {
  for (const Scenario& s : scenarios) validate(s);

  struct Outcome {
    EnumerationResult result;
    double seconds = 0;
  };
  std::vector<Outcome> outcomes(scenarios.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < scenarios.size(); k = next++) {
      const auto t0 = std::chrono::steady_clock::now();
      outcomes[k].result = enumerate_max(scenarios[k]);
      outcomes[k].seconds =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
  };
  const int workers = std::max(1, std::min<int>(jobs, static_cast<int>(scenarios.size())));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
  }

  std::vector<BoundEntry> entries;
  std::map<std::string, std::size_t> index;
  for (std::size_t k = 0; k < scenarios.size(); ++k) {
    const Scenario& s = scenarios[k];
    const Outcome& o = outcomes[k];
    auto [it, fresh] = index.emplace(s.entry_id(), entries.size());
    if (fresh) {
      BoundEntry e;
      e.id = s.entry_id();
      e.source = s.source;
      e.bound = s.bound;
      entries.push_back(std::move(e));
    }
    BoundEntry& e = entries[it->second];
    if (e.bound.num * s.bound.den != s.bound.num * e.bound.den)
      throw InputError("cases of entry '" + e.id + "' disagree on the bound");
    e.cases.push_back(s.id);
    e.nodes += o.result.nodes;
    e.seconds += o.seconds;
    if (o.result.feasible && (!e.computed || o.result.max > *e.computed)) {
      e.computed = o.result.max;
      e.argmax_case = s.id;
      e.witness = o.result.witness;
    }
  }
  for (BoundEntry& e : entries) e.status = derive_status(e.computed, e.bound);
  return entries;
}

bool any_violated(const std::vector<BoundEntry>& entries) {
  return std::any_of(entries.begin(), entries.end(),
                     [](const BoundEntry& e) { return e.status == BoundStatus::Violated; });
}

}  // namespace rtlab::scenario
