#include <vector>

#include "rtlab/core.hpp"
#include "rtlab/optcheck.hpp"

namespace rtlab::optcheck {

namespace {

int choose2(int x) { return x * (x - 1) / 2; }

class MixedTriangleSearch {
 public:
  MixedTriangleSearch(int a, int b) : a_(a), n_(a + b), adj_(n_ * n_, 0) {
    for (int j = 0; j < n_; ++j)
      for (int i = 0; i < j; ++i) edges_.push_back({i, j});
    chosen_.assign(edges_.size(), 0);
  }

  LemmaResult run() {
    dfs(0, 0);
    LemmaResult out;
    out.maximum = best_;
    for (std::size_t e = 0; e < edges_.size(); ++e)
      if (best_chosen_.size() && best_chosen_[e]) out.witness.push_back(edges_[e]);
    out.nodes = nodes_;
    return out;
  }

 private:
  bool mixed(int x, int y, int z) const {
    const int in_a = (x < a_) + (y < a_) + (z < a_);
    return in_a != 0 && in_a != 3;
  }

  // Edges are ordered by larger endpoint, so when (i, j) is placed every
  // triangle {k, i, j} with k < i is already decided.
  bool allowed(int i, int j) const {
    for (int k = 0; k < i; ++k)
      if (adj_[k * n_ + i] && adj_[k * n_ + j] && mixed(k, i, j)) return false;
    return true;
  }

  void dfs(std::size_t e, int cur) {
    ++nodes_;
    const int rest = static_cast<int>(edges_.size() - e);
    if (cur + rest <= best_) return;
    if (e == edges_.size()) {
      best_ = cur;
      best_chosen_ = chosen_;
      return;
    }
    const auto [i, j] = edges_[e];
    if (allowed(i, j)) {
      adj_[i * n_ + j] = adj_[j * n_ + i] = 1;
      chosen_[e] = 1;
      dfs(e + 1, cur + 1);
      chosen_[e] = 0;
      adj_[i * n_ + j] = adj_[j * n_ + i] = 0;
    }
    dfs(e + 1, cur);
  }

  int a_;
  int n_;
  std::vector<char> adj_;
  std::vector<std::array<int, 2>> edges_;
  std::vector<char> chosen_;
  std::vector<char> best_chosen_;
  int best_ = -1;
  std::uint64_t nodes_ = 0;
};

}  // namespace

LemmaResult lemma21_oracle(int a, int b) {
  if (a < 0 || b < 0) throw InputError("part sizes must be non-negative");
  if (a + b > kLemmaMaxVertices)
    throw InputError("a + b = " + std::to_string(a + b) + " exceeds the ceiling of " +
                     std::to_string(kLemmaMaxVertices));
  LemmaResult out = MixedTriangleSearch(a, b).run();
  out.a = a;
  out.b = b;
  out.bound = choose2(a) + choose2(b) + a;
  out.strong_bound = choose2(a) + choose2(b) + std::min(a, b);
  return out;
}

}  // namespace rtlab::optcheck
