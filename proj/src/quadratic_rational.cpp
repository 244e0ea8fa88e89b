#include <cmath>
#include <stdexcept>

#include <boost/multiprecision/cpp_dec_float.hpp>

#include "rtlab/optcheck.hpp"

namespace rtlab::optcheck {

namespace mp = boost::multiprecision;

namespace {

int sgn(const Rational& x) { return x.sign(); }

}  // namespace

int QuadraticRational::sign() const {
  const int sa = sgn(a_);
  const int sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // Opposite signs: the term with the larger square wins.
  const int sq = sgn(a_ * a_ - 7 * b_ * b_);
  return sq == 0 ? 0 : (sq > 0 ? sa : sb);
}

QuadraticRational& QuadraticRational::operator+=(const QuadraticRational& o) {
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

QuadraticRational& QuadraticRational::operator-=(const QuadraticRational& o) {
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

QuadraticRational& QuadraticRational::operator*=(const QuadraticRational& o) {
  Rational a = a_ * o.a_ + 7 * b_ * o.b_;
  Rational b = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

QuadraticRational& QuadraticRational::operator/=(const QuadraticRational& o) {
  const Rational n = o.norm();
  if (n == 0) throw std::domain_error("division by zero in Q(sqrt 7)");
  *this *= o.conjugate();
  a_ /= n;
  b_ /= n;
  return *this;
}

std::string QuadraticRational::decimal(int digits) const {
  if (digits < 0 || digits > 60) throw std::invalid_argument("decimal digits outside 0..60");
  using Float = mp::number<mp::cpp_dec_float<100>>;
  const int s = sign();
  const QuadraticRational mag = s < 0 ? -*this : *this;
  mp::cpp_int scale = 1;
  for (int k = 0; k < digits; ++k) scale *= 10;

  // target = |x| * 10^digits + 1/2; the answer is floor(target).
  const QuadraticRational target = mag * QuadraticRational(Rational(scale)) + QuadraticRational(Rational(1, 2));
  auto to_float = [](const Rational& q) {
    return Float(mp::numerator(q)) / Float(mp::denominator(q));
  };
  const Float approx = to_float(target.a()) + to_float(target.b()) * mp::sqrt(Float(7));
  mp::cpp_int m = static_cast<mp::cpp_int>(mp::floor(approx));
  while (QuadraticRational(Rational(m)) > target) --m;
  while (QuadraticRational(Rational(m + 1)) <= target) ++m;

  std::string body = m.str();
  if (static_cast<int>(body.size()) <= digits) body.insert(0, digits + 1 - body.size(), '0');
  std::string out = body.substr(0, body.size() - digits);
  if (digits > 0) out += "." + body.substr(body.size() - digits);
  if (s < 0 && m != 0) out.insert(0, "-");
  return out;
}

double QuadraticRational::to_double() const {
  return a_.convert_to<double>() + b_.convert_to<double>() * std::sqrt(7.0);
}

std::string QuadraticRational::str() const {
  if (b_ == 0) return a_.str();
  std::string out = a_ == 0 ? "" : a_.str() + (b_ > 0 ? " + " : " - ");
  const Rational mag = (a_ != 0 && b_ < 0) ? Rational(-b_) : b_;
  return out + mag.str() + "*sqrt(7)";
}

}  // namespace rtlab::optcheck
