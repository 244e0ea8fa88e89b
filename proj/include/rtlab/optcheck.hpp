#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

// Exact arithmetic in Q(sqrt 7), the mixed-triangle oracle, and a numeric
// feasibility scan of the terminal constraint system.
namespace rtlab::optcheck {

using Rational = boost::multiprecision::cpp_rational;

/// a + b*sqrt(7) with arbitrary-precision rational a, b.
class QuadraticRational {
 public:
  QuadraticRational() = default;
  QuadraticRational(Rational a, Rational b = 0) : a_(std::move(a)), b_(std::move(b)) {}
  QuadraticRational(std::int64_t a) : a_(a) {}

  static QuadraticRational sqrt7() { return {Rational(0), Rational(1)}; }

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }

  QuadraticRational conjugate() const { return {a_, -b_}; }
  /// a^2 - 7 b^2, a rational.
  Rational norm() const { return a_ * a_ - 7 * b_ * b_; }
  /// -1, 0 or 1, decided without floating point.
  int sign() const;

  QuadraticRational operator-() const { return {-a_, -b_}; }
  QuadraticRational& operator+=(const QuadraticRational& o);
  QuadraticRational& operator-=(const QuadraticRational& o);
  QuadraticRational& operator*=(const QuadraticRational& o);
  /// Throws std::domain_error on division by zero.
  QuadraticRational& operator/=(const QuadraticRational& o);

  friend QuadraticRational operator+(QuadraticRational x, const QuadraticRational& y) { return x += y; }
  friend QuadraticRational operator-(QuadraticRational x, const QuadraticRational& y) { return x -= y; }
  friend QuadraticRational operator*(QuadraticRational x, const QuadraticRational& y) { return x *= y; }
  friend QuadraticRational operator/(QuadraticRational x, const QuadraticRational& y) { return x /= y; }

  friend bool operator==(const QuadraticRational& x, const QuadraticRational& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend int compare(const QuadraticRational& x, const QuadraticRational& y) { return (x - y).sign(); }
  friend bool operator<(const QuadraticRational& x, const QuadraticRational& y) { return compare(x, y) < 0; }
  friend bool operator>(const QuadraticRational& x, const QuadraticRational& y) { return compare(x, y) > 0; }
  friend bool operator<=(const QuadraticRational& x, const QuadraticRational& y) { return compare(x, y) <= 0; }
  friend bool operator>=(const QuadraticRational& x, const QuadraticRational& y) { return compare(x, y) >= 0; }

  /// Decimal rendering with `digits` digits after the point, rounded half away from zero.
  std::string decimal(int digits) const;
  double to_double() const;
  /// "a + b*sqrt(7)" with the rationals in lowest terms.
  std::string str() const;

 private:
  Rational a_{0};
  Rational b_{0};
};

// ---- mixed-triangle oracle -------------------------------------------------

inline constexpr int kLemmaMaxVertices = 8;

struct LemmaResult {
  int a = 0;
  int b = 0;
  int maximum = 0;
  int bound = 0;         // C(a,2) + C(b,2) + a
  int strong_bound = 0;  // C(a,2) + C(b,2) + min(a,b)
  std::vector<std::array<int, 2>> witness;  // undirected edges; vertices 0..a-1 form A
  std::uint64_t nodes = 0;
};

/// Maximum edge count of an undirected graph on A + B (|A| = a, |B| = b)
/// with no triangle meeting both A and B. Pruned exhaustive search.
/// Throws InputError when a + b exceeds kLemmaMaxVertices or a size is negative.
LemmaResult lemma21_oracle(int a, int b);

// ---- terminal constraint system -------------------------------------------

struct Point {
  double u = 0, y = 0, z = 0, r = 0;
};

/// LHS_1 - 1/9 and LHS_2 - 1/3.
std::array<double, 2> slacks(const Point& p);
/// Linear part: 3u + y/2 + r <= 1, u - 3y/4 - z >= 0, all coordinates >= 0.
bool linear_feasible(const Point& p, double tol = 0.0);
/// Largest linear violation (0 when feasible).
double linear_violation(const Point& p);

/// Exact slacks for rational points.
std::array<Rational, 2> exact_slacks(const Rational& u, const Rational& y, const Rational& z,
                                     const Rational& r);

struct ScanParams {
  double step = 0.002;
  int polish_iters = 200;
  int polish_starts = 16;
  /// With strict inequalities the system is infeasible iff max slack <= 0
  /// (up to tolerance); otherwise feasibility means max slack >= -tolerance.
  bool strict = true;
  double tolerance = 1e-9;
  int jobs = 1;
};

struct ScanReport {
  double step = 0;
  int polish_iters = 0;
  bool strict = true;
  std::uint64_t grid_points = 0;  // linear-feasible grid points evaluated
  double grid_max = 0;
  Point grid_argmax;
  double max_slack = 0;  // after polish
  Point argmax;
  std::array<double, 2> slacks_at_argmax{};
  double distance_to_expected = 0;  // sup-norm distance to (1/3, 0, 0, 0)
  double linear_violation = 0;
  bool feasible = false;  // under the selected strictness
  bool pass = false;      // max slack <= tolerance and argmax within 1e-4 of (1/3, 0, 0, 0)
};

/// Throws InputError unless 0 < step <= 0.005 and polish_iters >= 0.
ScanReport scan_constraint_system(const ScanParams& params = {});

// ---- exact thresholds -----------------------------------------------------

struct Threshold {
  std::string name;
  std::string description;
  QuadraticRational value;  // coefficient of n^2 (per c for the linear-in-c totals)
  std::string decimal;      // 12 digits
};

struct Identity {
  std::string name;
  bool holds = false;
};

struct ThresholdTable {
  std::vector<Threshold> constants;
  std::vector<Identity> identities;
  bool pass = false;
};

ThresholdTable thresholds();

}  // namespace rtlab::optcheck
