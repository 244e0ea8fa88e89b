#include <algorithm>
#include <cmath>
#include <limits>
#include <atomic>
#include <mutex>
#include <optional>
#include <thread>

#include "rtlab/core.hpp"
#include "rtlab/optcheck.hpp"

namespace rtlab::optcheck {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kEdge = 1e-12;

using Vec = std::array<double, 4>;  // (u, y, z, r)

Vec as_vec(const Point& p) { return {p.u, p.y, p.z, p.r}; }
Point as_point(const Vec& v) { return {v[0], v[1], v[2], v[3]}; }

double score(const Point& p) {
  const auto s = slacks(p);
  return std::min(s[0], s[1]);
}

// Linear constraints written as g . x <= h.
struct Halfspace {
  Vec g;
  double h;
};

const std::array<Halfspace, 6> kLinear = {{
    {{3, 0.5, 0, 1}, 1},
    {{-1, 0.75, 1, 0}, 0},
    {{-1, 0, 0, 0}, 0},
    {{0, -1, 0, 0}, 0},
    {{0, 0, -1, 0}, 0},
    {{0, 0, 0, -1}, 0},
}};

double dot(const Vec& a, const Vec& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3];
}

Vec along(const Vec& x, const Vec& d, double t) {
  return {x[0] + t * d[0], x[1] + t * d[1], x[2] + t * d[2], x[3] + t * d[3]};
}

std::array<Vec, 2> gradients(const Vec& x) {
  const double u = x[0], y = x[1], z = x[2], r = x[3];
  const double t = 0.5 * z + 0.75 * r;
  const double s = u + 7.0 / 12.0 * y + t;
  const double w = 1 - r - 0.5 * y - 2 * u;
  return {Vec{2 * s, 7.0 / 6.0 * s, s - t, 1.5 * (s - t)},
          Vec{4 * u - 4 * w, -w - 0.5 * z, -0.5 * y - 3 * z, -2 * w}};
}

// Second-order coefficients of both slacks along d (the Hessians are constant).
std::array<double, 2> curvature(const Vec& d) {
  const double t = 0.5 * d[2] + 0.75 * d[3];
  const double s = d[0] + 7.0 / 12.0 * d[1] + t;
  const double w = -d[3] - 0.5 * d[1] - 2 * d[0];
  return {s * s - t * t, 2 * d[0] * d[0] + w * w - 0.5 * d[1] * d[2] - 1.5 * d[2] * d[2]};
}

// Exact maximization of min(s1, s2) on the feasible segment x + t d. Both
// slacks are quadratic in t, so the optimum sits at an endpoint, a vertex of
// one parabola, or a crossing.
bool line_step(Vec& x, Vec d) {
  const double len = std::sqrt(dot(d, d));
  if (len == 0) return false;
  for (double& v : d) v /= len;
  double lo = -kInf, hi = kInf;
  for (const auto& hs : kLinear) {
    const double gd = dot(hs.g, d);
    const double room = hs.h - dot(hs.g, x);
    if (std::abs(gd) < 1e-15) continue;
    if (gd > 0) hi = std::min(hi, room / gd);
    else lo = std::max(lo, room / gd);
  }
  lo = std::min(lo, 0.0);
  hi = std::max(hi, 0.0);
  if (!std::isfinite(lo) || !std::isfinite(hi)) return false;

  const auto [g1, g2] = gradients(x);
  const auto [c1, c2] = curvature(d);
  const auto s0 = slacks(as_point(x));
  const std::array<double, 3> q1{c1, dot(g1, d), s0[0]};
  const std::array<double, 3> q2{c2, dot(g2, d), s0[1]};

  std::vector<double> cand{lo, hi, 0.0};
  for (const auto& q : {q1, q2})
    if (std::abs(q[0]) > 1e-18) cand.push_back(-q[1] / (2 * q[0]));
  const double A = q1[0] - q2[0], B = q1[1] - q2[1], C = q1[2] - q2[2];
  if (std::abs(A) > 1e-18) {
    const double disc = B * B - 4 * A * C;
    if (disc >= 0) {
      const double sq = std::sqrt(disc);
      cand.push_back((-B + sq) / (2 * A));
      cand.push_back((-B - sq) / (2 * A));
    }
  } else if (std::abs(B) > 1e-18) {
    cand.push_back(-C / B);
  }

  double best_t = 0;
  double best = score(as_point(x));
  for (double t : cand) {
    if (!(t >= lo && t <= hi)) continue;
    const double v = score(as_point(along(x, d, t)));
    if (v > best) {
      best = v;
      best_t = t;
    }
  }
  if (best_t == 0) return false;
  x = along(x, d, best_t);
  for (double& v : x) v = std::max(v, 0.0);
  return true;
}

// Axis directions plus pairwise moves and the edges of the two non-trivial
// linear constraints, so that ascent can slide along an active face.
std::vector<Vec> directions() {
  std::vector<Vec> out;
  for (int i = 0; i < 4; ++i) {
    Vec e{};
    e[i] = 1;
    out.push_back(e);
  }
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      for (double s : {1.0, -1.0}) {
        Vec e{};
        e[i] = 1;
        e[j] = s;
        out.push_back(e);
      }
  out.push_back({1, 0, 0, -3});
  out.push_back({1, -6, 0, 0});
  out.push_back({0, 2, 0, -1});
  out.push_back({1, 0, 1, 0});
  out.push_back({3, 4, 0, 0});
  out.push_back({0, 4, -3, 0});
  return out;
}

Vec project_onto_face(const Vec& x, Vec g) {
  std::vector<Vec> basis;
  for (const auto& hs : kLinear) {
    if (dot(hs.g, x) < hs.h - 1e-10) continue;
    Vec a = hs.g;
    for (const Vec& b : basis) {
      const double k = dot(a, b);
      for (int i = 0; i < 4; ++i) a[i] -= k * b[i];
    }
    const double norm = std::sqrt(dot(a, a));
    if (norm < 1e-12) continue;
    for (double& v : a) v /= norm;
    basis.push_back(a);
  }
  for (const Vec& b : basis) {
    const double k = dot(g, b);
    for (int i = 0; i < 4; ++i) g[i] -= k * b[i];
  }
  return g;
}

// Direction raising both slacks at unit rate inside the face of the active
// linear constraints.
std::optional<Vec> ridge_direction(const Vec& x) {
  auto [g1, g2] = gradients(x);
  g1 = project_onto_face(x, g1);
  g2 = project_onto_face(x, g2);
  const double a11 = dot(g1, g1), a12 = dot(g1, g2), a22 = dot(g2, g2);
  const double det = a11 * a22 - a12 * a12;
  if (std::abs(det) <= 1e-14 * std::max(1.0, a11 * a22)) return std::nullopt;
  const double c1 = (a22 - a12) / det, c2 = (a11 - a12) / det;
  Vec d;
  for (int i = 0; i < 4; ++i) d[i] = c1 * g1[i] + c2 * g2[i];
  return d;
}

// Predictor-corrector move along the curve s1 = s2: a tangent step of length
// alpha followed by Newton corrections back onto the curve.
bool ridge_step(Vec& x, double& alpha) {
  const auto d = ridge_direction(x);
  if (!d) return false;
  Vec t = *d;
  const double len = std::sqrt(dot(t, t));
  if (len == 0) return false;
  for (double& v : t) v /= len;
  const double before = score(as_point(x));
  while (alpha > 1e-15) {
    Vec y = along(x, t, alpha);
    for (int k = 0; k < 4; ++k) {
      const auto s = slacks(as_point(y));
      const auto [g1, g2] = gradients(y);
      Vec n;
      for (int i = 0; i < 4; ++i) n[i] = g1[i] - g2[i];
      n = project_onto_face(x, n);
      const double nn = dot(n, n);
      if (nn < 1e-30) break;
      y = along(y, n, -(s[0] - s[1]) / nn);
    }
    if (linear_violation(as_point(y)) <= 1e-15 && score(as_point(y)) > before) {
      for (double& v : y) v = std::max(v, 0.0);
      x = y;
      alpha *= 2;
      return true;
    }
    alpha /= 2;
  }
  return false;
}

Point polish(Point start, int iters) {
  Vec x = as_vec(start);
  const auto dirs = directions();
  double alpha = 1e-3;
  for (int it = 0; it < iters; ++it) {
    bool moved = false;
    if (auto d = ridge_direction(x)) moved |= line_step(x, *d);
    for (const Vec& d : dirs) moved |= line_step(x, d);
    if (alpha < 1e-15) alpha = 1e-3;
    moved |= ridge_step(x, alpha);
    if (!moved) break;
  }
  return as_point(x);
}

struct Candidate {
  double value;
  Point p;
};

}  // namespace

std::array<double, 2> slacks(const Point& p) {
  const double t = 0.5 * p.z + 0.75 * p.r;
  const double s = p.u + 7.0 / 12.0 * p.y + t;
  const double w = 1 - p.r - 0.5 * p.y - 2 * p.u;
  return {s * s - t * t - 1.0 / 9.0,
          2 * p.u * p.u + w * w - 0.5 * p.y * p.z - 1.5 * p.z * p.z - 1.0 / 3.0};
}

double linear_violation(const Point& p) {
  const Vec x = as_vec(p);
  double worst = 0;
  for (const auto& hs : kLinear) worst = std::max(worst, dot(hs.g, x) - hs.h);
  return worst;
}

bool linear_feasible(const Point& p, double tol) { return linear_violation(p) <= tol; }

std::array<Rational, 2> exact_slacks(const Rational& u, const Rational& y, const Rational& z,
                                     const Rational& r) {
  const Rational t = z / 2 + 3 * r / 4;
  const Rational s = u + 7 * y / 12 + t;
  const Rational w = 1 - r - y / 2 - 2 * u;
  return {s * s - t * t - Rational(1, 9),
          2 * u * u + w * w - y * z / 2 - 3 * z * z / 2 - Rational(1, 3)};
}

ScanReport scan_constraint_system(const ScanParams& params) {
  if (!(params.step > 0 && params.step <= 0.005))
    throw InputError("grid step must lie in (0, 0.005]");
  if (params.polish_iters < 0) throw InputError("polish iterations must be non-negative");

  const double h = params.step;
  const int u_steps = static_cast<int>(std::floor(1.0 / (3 * h) + kEdge));
  const std::size_t keep = static_cast<std::size_t>(std::max(1, params.polish_starts));

  std::mutex merge_lock;
  std::vector<Candidate> top;
  std::uint64_t points = 0;
  std::atomic<int> next_row{0};

  auto worker = [&] {
    std::vector<Candidate> local;
    std::uint64_t local_points = 0;
    double floor_value = -kInf;  // smallest kept value once `local` is full
    auto offer = [&](double v, const Point& p) {
      if (local.size() < keep) {
        local.push_back({v, p});
      } else {
        auto worst = std::min_element(local.begin(), local.end(),
                                      [](const Candidate& a, const Candidate& b) { return a.value < b.value; });
        *worst = {v, p};
      }
      if (local.size() == keep)
        floor_value = std::min_element(local.begin(), local.end(), [](const Candidate& a, const Candidate& b) {
                        return a.value < b.value;
                      })->value;
    };
    for (int i = next_row++; i <= u_steps; i = next_row++) {
      const double u = i * h;
      for (int j = 0;; ++j) {
        const double y = j * h;
        if (0.75 * y > u + kEdge || 3 * u + 0.5 * y > 1 + kEdge) break;
        for (int k = 0;; ++k) {
          const double z = k * h;
          if (0.75 * y + z > u + kEdge) break;
          for (int l = 0;; ++l) {
            const double r = l * h;
            if (3 * u + 0.5 * y + r > 1 + kEdge) break;
            const Point p{u, y, z, r};
            ++local_points;
            const double v = score(p);
            if (v > floor_value) offer(v, p);
          }
        }
      }
    }
    std::lock_guard lock(merge_lock);
    points += local_points;
    top.insert(top.end(), local.begin(), local.end());
  };

  const int workers = std::max(1, params.jobs);
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
  }

  // Deterministic order regardless of thread interleaving.
  std::sort(top.begin(), top.end(), [](const Candidate& a, const Candidate& b) {
    if (a.value != b.value) return a.value > b.value;
    return std::tie(a.p.u, a.p.y, a.p.z, a.p.r) < std::tie(b.p.u, b.p.y, b.p.z, b.p.r);
  });
  if (top.size() > keep) top.resize(keep);

  ScanReport rep;
  rep.step = h;
  rep.polish_iters = params.polish_iters;
  rep.strict = params.strict;
  rep.grid_points = points;
  rep.grid_max = top.front().value;
  rep.grid_argmax = top.front().p;
  rep.max_slack = -kInf;
  for (const Candidate& c : top) {
    const Point q = polish(c.p, params.polish_iters);
    const double v = score(q);
    if (v > rep.max_slack) {
      rep.max_slack = v;
      rep.argmax = q;
    }
  }
  rep.slacks_at_argmax = slacks(rep.argmax);
  rep.distance_to_expected = std::max({std::abs(rep.argmax.u - 1.0 / 3.0), std::abs(rep.argmax.y),
                                       std::abs(rep.argmax.z), std::abs(rep.argmax.r)});
  rep.linear_violation = linear_violation(rep.argmax);
  rep.feasible = params.strict ? rep.max_slack > params.tolerance
                               : rep.max_slack >= -params.tolerance;
  rep.pass = rep.max_slack <= params.tolerance && rep.distance_to_expected <= 1e-4 &&
             rep.linear_violation <= 1e-12;
  return rep;
}

}  // namespace rtlab::optcheck
