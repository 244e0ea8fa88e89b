#include "rtlab/search.hpp"

#include <algorithm>
#include <numeric>

#include "rtlab/patterns.hpp"
#include "rtlab/profile.hpp"

namespace rtlab {

using profile::Profile;

std::string to_string(GraphClass g) { return g == GraphClass::Digraph ? "digraph" : "oriented"; }

std::string to_string(Objective o) { return o == Objective::MaxTotal ? "max-total" : "max-min"; }

std::optional<GraphClass> parse_graph_class(std::string_view s) {
  if (s == "digraph") return GraphClass::Digraph;
  if (s == "oriented") return GraphClass::Oriented;
  return std::nullopt;
}

std::optional<Objective> parse_objective(std::string_view s) {
  if (s == "max-total") return Objective::MaxTotal;
  if (s == "max-min") return Objective::MaxMin;
  return std::nullopt;
}

namespace {

// Least integer value over all color permutations of a profile.
Profile color_canonical(Profile p, int c) {
  std::vector<int> perm(static_cast<std::size_t>(c));
  std::iota(perm.begin(), perm.end(), 0);
  Profile best = p;
  do {
    Profile q = 0;
    for (int i = 0; i < c; ++i) q |= ((p >> (2 * i)) & 3u) << (2 * perm[static_cast<std::size_t>(i)]);
    best = std::min(best, q);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

struct PairSlot {
  Vertex lo = 0;
  Vertex hi = 0;
  std::vector<std::size_t> tri_lo;  // pair index of (w, lo) for each w < lo
  std::vector<std::size_t> tri_hi;  // pair index of (w, hi) for the same w
};

class Engine {
 public:
  Engine(const SearchProblem& p, const SearchBudget& b) : prob_(p), budget_(b) {
    const int n = p.n;
    auto idx = [](Vertex lo, Vertex hi) {
      return static_cast<std::size_t>(hi) * (hi - 1) / 2 + static_cast<std::size_t>(lo);
    };
    // Colex order: every triangle completes at its pair with the two largest vertices.
    for (Vertex hi = 1; hi < n; ++hi)
      for (Vertex lo = 0; lo < hi; ++lo) {
        PairSlot s{lo, hi, {}, {}};
        for (Vertex w = 0; w < lo; ++w) {
          s.tri_lo.push_back(idx(w, lo));
          s.tri_hi.push_back(idx(w, hi));
        }
        slots_.push_back(std::move(s));
      }
    const bool oriented = p.graph_class == GraphClass::Oriented;
    std::vector<Profile> dom = profile::all_profiles(p.c, oriented);
    std::stable_sort(dom.begin(), dom.end(),
                     [](Profile a, Profile b) { return profile::edges(a) > profile::edges(b); });
    domain_ = dom;
    for (Profile q : dom)
      if (!b.color_symmetry || color_canonical(q, p.c) == q) first_domain_.push_back(q);
    per_pair_max_ = oriented ? p.c : 2 * p.c;
    per_color_max_ = oriented ? 1 : 2;
    assigned_.assign(slots_.size(), 0);
  }

  SearchResult run() {
    SearchResult r;
    if (prob_.objective == Objective::MaxTotal) {
      best_ = -1;
      dfs_total(0, 0);
      r.optimum = best_;
    } else {
      // Largest t such that a pattern-free graph has every color >= t.
      std::int64_t lo = 0;
      std::int64_t hi = static_cast<std::int64_t>(slots_.size()) * per_color_max_ + 1;
      best_assign_.assign(slots_.size(), 0);
      while (hi - lo > 1 && !aborted_) {
        const std::int64_t mid = lo + (hi - lo) / 2;
        if (feasible(mid))
          lo = mid;
        else
          hi = mid;
      }
      r.optimum = lo;
    }
    r.witness = to_graph(best_assign_);
    r.explored = nodes_;
    r.exhaustive = !aborted_;
    if (prob_.objective == Objective::MaxMin) r.optimum = objective_value(prob_, r.witness);
    return r;
  }

 private:
  const std::vector<Profile>& domain_for(std::size_t k) const {
    return k == 0 ? first_domain_ : domain_;
  }

  bool tick() {
    ++nodes_;
    if (budget_.max_nodes != 0 && nodes_ > budget_.max_nodes) aborted_ = true;
    return !aborted_;
  }

  bool consistent(std::size_t k, Profile q) const {
    const PairSlot& s = slots_[k];
    for (std::size_t t = 0; t < s.tri_lo.size(); ++t) {
      // Triple w < lo < hi.
      const auto m = profile::triple_masks(assigned_[s.tri_lo[t]], assigned_[s.tri_hi[t]], q,
                                           prob_.c);
      if (profile::has_rainbow(prob_.pattern, m)) return false;
    }
    return true;
  }

  void dfs_total(std::size_t k, std::int64_t cur) {
    if (!tick()) return;
    if (k == slots_.size()) {
      if (cur > best_) {
        best_ = cur;
        best_assign_ = assigned_;
      }
      return;
    }
    const std::int64_t rest = static_cast<std::int64_t>(slots_.size() - k - 1) * per_pair_max_;
    for (Profile q : domain_for(k)) {
      if (cur + profile::edges(q) + rest <= best_) break;
      if (!consistent(k, q)) continue;
      assigned_[k] = q;
      dfs_total(k + 1, cur + profile::edges(q));
      if (aborted_) return;
    }
  }

  bool feasible(std::int64_t t) {
    std::vector<std::int64_t> counts(static_cast<std::size_t>(prob_.c), 0);
    return dfs_min(0, counts, t);
  }

  bool dfs_min(std::size_t k, std::vector<std::int64_t>& counts, std::int64_t t) {
    if (!tick()) return false;
    const std::int64_t rest = static_cast<std::int64_t>(slots_.size() - k) * per_color_max_;
    for (std::int64_t v : counts)
      if (v + rest < t) return false;
    if (k == slots_.size()) {
      best_assign_ = assigned_;
      return true;
    }
    for (Profile q : domain_for(k)) {
      if (!consistent(k, q)) continue;
      assigned_[k] = q;
      const auto f = profile::forward(q, prob_.c);
      const auto b = profile::backward(q, prob_.c);
      for (int i = 0; i < prob_.c; ++i) counts[static_cast<std::size_t>(i)] += ((f >> i) & 1u) + ((b >> i) & 1u);
      const bool ok = dfs_min(k + 1, counts, t);
      for (int i = 0; i < prob_.c; ++i) counts[static_cast<std::size_t>(i)] -= ((f >> i) & 1u) + ((b >> i) & 1u);
      if (ok) return true;
      if (aborted_) return false;
    }
    return false;
  }

  ColoredDigraph to_graph(const std::vector<Profile>& a) const {
    GraphBuilder g(prob_.n, prob_.c);
    for (std::size_t k = 0; k < a.size() && k < slots_.size(); ++k) {
      for (Color i = 1; i <= prob_.c; ++i) {
        if (a[k] & profile::bit(i, true)) g.add_edge(i, slots_[k].lo, slots_[k].hi);
        if (a[k] & profile::bit(i, false)) g.add_edge(i, slots_[k].hi, slots_[k].lo);
      }
    }
    return g.build();
  }

  SearchProblem prob_;
  SearchBudget budget_;
  std::vector<PairSlot> slots_;
  std::vector<Profile> domain_;
  std::vector<Profile> first_domain_;
  std::vector<Profile> assigned_;
  std::vector<Profile> best_assign_;
  std::int64_t best_ = -1;
  std::int64_t per_pair_max_ = 0;
  std::int64_t per_color_max_ = 0;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
};

}  // namespace

SearchResult solve(const SearchProblem& p, const SearchBudget& budget) {
  if (p.n < 0) throw InputError("search needs n >= 0");
  if (p.c < 1 || p.c > kMaxSearchColors)
    throw InputError("search supports 1.." + std::to_string(kMaxSearchColors) + " colors");
  Engine e(p, budget);
  return e.run();
}

std::int64_t objective_value(const SearchProblem& p, const ColoredDigraph& g) {
  if (p.objective == Objective::MaxTotal) return static_cast<std::int64_t>(g.count_total());
  std::int64_t m = -1;
  for (Color i = 1; i <= g.c(); ++i) {
    const auto v = static_cast<std::int64_t>(g.count_color(i));
    m = (m < 0) ? v : std::min(m, v);
  }
  return std::max<std::int64_t>(m, 0);
}

bool verify_witness(const SearchProblem& p, const ColoredDigraph& g,
                    std::optional<std::int64_t> claimed) {
  if (g.n() != p.n || g.c() != p.c) throw InputError("witness dimensions do not match the problem");
  if (p.graph_class == GraphClass::Oriented && !g.is_oriented()) return false;
  if (find_rainbow(g, p.pattern)) return false;
  if (claimed && objective_value(p, g) != *claimed) return false;
  return true;
}

}  // namespace rtlab
