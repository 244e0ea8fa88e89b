#include <algorithm>
#include <numeric>

#include "rtlab/scenario.hpp"

namespace rtlab::scenario {

using profile::ColorMask;
using profile::Profile;

namespace {

ColorMask mask_of(const std::vector<Color>& colors, int c) {
  if (colors.empty()) return (ColorMask{1} << c) - 1;
  ColorMask m = 0;
  for (Color col : colors) m |= ColorMask{1} << (col - 1);
  return m;
}

// A constraint spanning several vertex pairs, evaluated once all of them are set.
struct Check {
  enum class Kind { Rainbow, AtMostOne, NoCommon, ThickPath } kind = Kind::Rainbow;
  std::vector<std::size_t> pairs;
  TriangleKind pattern = TriangleKind::Directed;
  PairClass cls = PairClass::DoubleDouble;
  ColorMask colors = 0;
  // ThickPath: ends p, r around middle q; pairs = {(p,q), (q,r)}.
  bool p_is_lo = false;  // p < q
  bool q_is_lo = false;  // q < r
};

class Enumerator {
 public:
  explicit Enumerator(const Scenario& s) : s_(s), c_(s.c), k_(static_cast<int>(s.vertices.size())) {
    for (int lo = 0; lo < k_; ++lo)
      for (int hi = lo + 1; hi < k_; ++hi) pairs_.push_back({lo, hi});
    build_domains();
    build_checks();
    build_order();
  }

  EnumerationResult run() {
    EnumerationResult r;
    assign_.assign(pairs_.size(), 0);
    best_ = -1;
    if (std::none_of(domains_.begin(), domains_.end(), [](const auto& d) { return d.empty(); }))
      dfs(0, 0);
    r.nodes = nodes_;
    r.feasible = best_ >= 0;
    if (r.feasible) {
      r.max = static_cast<int>(best_);
      r.witness = to_graph(best_assign_);
    }
    return r;
  }

 private:
  std::size_t pair_index(int a, int b) const {
    const int lo = std::min(a, b);
    const int hi = std::max(a, b);
    // Row-major over lo < hi.
    return static_cast<std::size_t>(lo * k_ - lo * (lo + 1) / 2 + (hi - lo - 1));
  }

  void build_domains() {
    const bool oriented = std::any_of(s_.constraints.begin(), s_.constraints.end(), [](const auto& c) {
      return std::holds_alternative<rule::Oriented>(c);
    });
    domains_.assign(pairs_.size(), profile::all_profiles(c_, oriented));

    auto restrict = [&](std::size_t pi, auto&& keep) {
      auto& d = domains_[pi];
      d.erase(std::remove_if(d.begin(), d.end(), [&](Profile p) { return !keep(p); }), d.end());
    };
    auto for_pairs = [&](const std::vector<VertexPair>& listed, auto&& fn) {
      if (listed.empty()) {
        for (std::size_t pi = 0; pi < pairs_.size(); ++pi) fn(pi);
      } else {
        for (const auto& p : listed) fn(pair_index(p.first, p.second));
      }
    };

    for (const Group& g : s_.groups) {
      const auto profiles = pair_type_profiles(g.type);
      if (profiles.empty() || g.vertices.size() != 2) continue;
      const int a = g.vertices[0];
      const int b = g.vertices[1];
      std::vector<Profile> allowed;
      for (Profile p : profiles) allowed.push_back(a < b ? p : profile::swapped(p, c_));
      restrict(pair_index(a, b), [&](Profile p) {
        return std::find(allowed.begin(), allowed.end(), p) != allowed.end();
      });
    }

    for (const FixedEdge& e : s_.fixed_edges) {
      const Profile b = profile::bit(e.color, e.from < e.to);
      restrict(pair_index(e.from, e.to), [&](Profile p) { return ((p & b) != 0) == e.present; });
    }

    for (const Constraint& con : s_.constraints) {
      if (auto* r = std::get_if<rule::MaxPairEdges>(&con)) {
        for_pairs(r->pairs, [&](std::size_t pi) {
          restrict(pi, [&](Profile p) { return profile::edges(p) <= r->max; });
        });
      } else if (auto* r = std::get_if<rule::MaxDoubles>(&con)) {
        for_pairs(r->pairs, [&](std::size_t pi) {
          restrict(pi, [&](Profile p) { return profile::doubles(p, c_) <= r->max; });
        });
      } else if (auto* r = std::get_if<rule::ForbidClass>(&con)) {
        for_pairs(r->pairs, [&](std::size_t pi) {
          restrict(pi, [&](Profile p) { return !in_class(p, r->cls, c_); });
        });
      } else if (auto* r = std::get_if<rule::PairEdges>(&con)) {
        const ColorMask m = mask_of(r->colors, c_);
        restrict(pair_index(r->pair.first, r->pair.second), [&](Profile p) {
          const int e = profile::edges_in(p, m, c_);
          return e >= r->min && (!r->max || e <= *r->max);
        });
      } else if (auto* r = std::get_if<rule::MinDirected>(&con)) {
        const bool from_lo = r->from < r->to;
        restrict(pair_index(r->from, r->to),
                 [&](Profile p) { return profile::edges_from(p, from_lo, c_) >= r->min; });
      }
    }

    const ColorMask obj = mask_of(s_.objective.colors, c_);
    auto side = [&](int v) {
      auto has = [v](const std::vector<int>& xs) { return std::find(xs.begin(), xs.end(), v) != xs.end(); };
      return has(s_.objective.side_a) ? 1 : (has(s_.objective.side_b) ? 2 : 0);
    };
    contrib_.resize(pairs_.size());
    for (std::size_t pi = 0; pi < pairs_.size(); ++pi) {
      const int sa = side(pairs_[pi].first);
      const int sb = side(pairs_[pi].second);
      const bool crossing = sa != 0 && sb != 0 && sa != sb;
      crossing_.push_back(crossing);
      auto& d = domains_[pi];
      auto weight = [&](Profile p) { return crossing ? profile::edges_in(p, obj, c_) : 0; };
      std::stable_sort(d.begin(), d.end(), [&](Profile a, Profile b) { return weight(a) > weight(b); });
      for (Profile p : d) contrib_[pi].push_back(weight(p));
    }
  }

  void build_checks() {
    for (const Constraint& con : s_.constraints) {
      if (auto* r = std::get_if<rule::NoRainbow>(&con)) {
        for (int a = 0; a < k_; ++a)
          for (int b = a + 1; b < k_; ++b)
            for (int x = b + 1; x < k_; ++x) {
              Check ch;
              ch.kind = Check::Kind::Rainbow;
              ch.pattern = r->pattern;
              ch.pairs = {pair_index(a, b), pair_index(a, x), pair_index(b, x)};
              checks_.push_back(ch);
            }
      } else if (auto* r = std::get_if<rule::AtMostOne>(&con)) {
        Check ch;
        ch.kind = Check::Kind::AtMostOne;
        ch.cls = r->cls;
        ch.pairs = {pair_index(r->vertex, r->pair.first), pair_index(r->vertex, r->pair.second)};
        checks_.push_back(ch);
      } else if (auto* r = std::get_if<rule::NoCommonColor>(&con)) {
        Check ch;
        ch.kind = Check::Kind::NoCommon;
        ch.colors = mask_of(r->colors, c_);
        ch.pairs = {pair_index(r->first.first, r->first.second),
                    pair_index(r->second.first, r->second.second)};
        checks_.push_back(ch);
      } else if (std::holds_alternative<rule::NoThickPath>(con)) {
        for (int q = 0; q < k_; ++q)
          for (int p = 0; p < k_; ++p)
            for (int x = p + 1; x < k_; ++x) {
              if (p == q || x == q) continue;
              Check ch;
              ch.kind = Check::Kind::ThickPath;
              ch.pairs = {pair_index(p, q), pair_index(q, x)};
              ch.p_is_lo = p < q;
              ch.q_is_lo = q < x;
              checks_.push_back(ch);
            }
      }
    }
  }

  // Unconstrained pairs with small domains first; objective pairs last so the
  // forward-checking bound sees as many fixed neighbours as possible.
  void build_order() {
    order_.resize(pairs_.size());
    std::iota(order_.begin(), order_.end(), std::size_t{0});
    std::stable_sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) {
      if (crossing_[a] != crossing_[b]) return !crossing_[a];
      return domains_[a].size() < domains_[b].size();
    });
    std::vector<std::size_t> pos(pairs_.size());
    for (std::size_t d = 0; d < order_.size(); ++d) pos[order_[d]] = d;

    const std::size_t n = order_.size();
    trigger_.assign(n, {});
    lookahead_.assign(n, std::vector<std::vector<std::size_t>>(n));
    for (std::size_t ci = 0; ci < checks_.size(); ++ci) {
      std::size_t last = 0;
      for (std::size_t pi : checks_[ci].pairs) last = std::max(last, pos[pi]);
      trigger_[last].push_back(ci);
      // With everything up to depth d set, pair at position `last` can be
      // tested against this check once all its other pairs are set.
      std::size_t second = 0;
      for (std::size_t pi : checks_[ci].pairs)
        if (pos[pi] != last) second = std::max(second, pos[pi]);
      for (std::size_t d = second; d < last; ++d) lookahead_[d][last].push_back(ci);
    }
    static_rest_.assign(n + 1, 0);
    for (std::size_t d = n; d-- > 0;) {
      const auto& c = contrib_[order_[d]];
      static_rest_[d] = static_rest_[d + 1] + (c.empty() ? 0 : c.front());
    }
  }

  bool holds(const Check& ch) const {
    switch (ch.kind) {
      case Check::Kind::Rainbow: {
        const auto m = profile::triple_masks(assign_[ch.pairs[0]], assign_[ch.pairs[1]],
                                             assign_[ch.pairs[2]], c_);
        return !profile::has_rainbow(ch.pattern, m);
      }
      case Check::Kind::AtMostOne:
        return !(in_class(assign_[ch.pairs[0]], ch.cls, c_) &&
                 in_class(assign_[ch.pairs[1]], ch.cls, c_));
      case Check::Kind::NoCommon: {
        auto present = [&](Profile p) {
          return profile::forward(p, c_) | profile::backward(p, c_);
        };
        return (present(assign_[ch.pairs[0]]) & present(assign_[ch.pairs[1]]) & ch.colors) == 0;
      }
      case Check::Kind::ThickPath: {
        const Profile pq = assign_[ch.pairs[0]];
        const Profile qr = assign_[ch.pairs[1]];
        const bool forward = profile::edges_from(pq, ch.p_is_lo, c_) >= 3 &&
                             profile::edges_from(qr, ch.q_is_lo, c_) >= 3;
        const bool backward = profile::edges_from(qr, !ch.q_is_lo, c_) >= 3 &&
                              profile::edges_from(pq, !ch.p_is_lo, c_) >= 3;
        return !forward && !backward;
      }
    }
    return true;
  }

  void dfs(std::size_t d, std::int64_t cur) {
    ++nodes_;
    if (d == order_.size()) {
      if (cur > best_) {
        best_ = cur;
        best_assign_ = assign_;
      }
      return;
    }
    const std::size_t pi = order_[d];
    const auto& dom = domains_[pi];
    const auto& con = contrib_[pi];
    for (std::size_t t = 0; t < dom.size(); ++t) {
      const std::int64_t next = cur + con[t];
      if (next + static_rest_[d + 1] <= best_) break;
      assign_[pi] = dom[t];
      bool ok = true;
      for (std::size_t ci : trigger_[d])
        if (!holds(checks_[ci])) {
          ok = false;
          break;
        }
      if (!ok) continue;
      std::int64_t bound = next;
      for (std::size_t e = d + 1; e < order_.size() && ok; ++e) {
        const std::size_t pe = order_[e];
        const auto& checks = lookahead_[d][e];
        const auto& de = domains_[pe];
        bool found = false;
        for (std::size_t u = 0; u < de.size(); ++u) {
          assign_[pe] = de[u];
          if (std::all_of(checks.begin(), checks.end(),
                          [&](std::size_t ci) { return holds(checks_[ci]); })) {
            bound += contrib_[pe][u];
            found = true;
            break;
          }
        }
        ok = found;
      }
      if (!ok || bound <= best_) continue;
      dfs(d + 1, next);
    }
  }

  ColoredDigraph to_graph(const std::vector<Profile>& a) const {
    GraphBuilder g(k_, c_);
    for (std::size_t pi = 0; pi < pairs_.size(); ++pi)
      for (Color i = 1; i <= c_; ++i) {
        if (a[pi] & profile::bit(i, true)) g.add_edge(i, pairs_[pi].first, pairs_[pi].second);
        if (a[pi] & profile::bit(i, false)) g.add_edge(i, pairs_[pi].second, pairs_[pi].first);
      }
    return g.build();
  }

  const Scenario& s_;
  int c_;
  int k_;
  std::vector<VertexPair> pairs_;
  std::vector<std::vector<Profile>> domains_;
  std::vector<std::vector<int>> contrib_;
  std::vector<bool> crossing_;
  std::vector<Check> checks_;
  std::vector<std::size_t> order_;
  std::vector<std::vector<std::size_t>> trigger_;
  std::vector<std::vector<std::vector<std::size_t>>> lookahead_;  // [depth][later position]
  std::vector<std::int64_t> static_rest_;
  std::vector<Profile> assign_;
  std::vector<Profile> best_assign_;
  std::int64_t best_ = -1;
  std::uint64_t nodes_ = 0;
};

}  // namespace

EnumerationResult enumerate_max(const Scenario& s) {
  validate(s);
  Enumerator e(s);
  return e.run();
}

}  // namespace rtlab::scenario
