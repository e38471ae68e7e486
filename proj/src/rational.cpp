#include "bernst/rational.hpp"

#include <stdexcept>
#include <utility>

namespace bernst {

Rational::Rational(ExactInt numerator, ExactInt denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_.is_zero()) throw std::domain_error("Rational: zero denominator");
  if (num_.is_zero()) {
    den_ = ExactInt(1);
    return;
  }
  if (den_.is_negative()) {
    num_ = -num_;
    den_ = -den_;
  }
  ExactInt g = gcd(num_, den_);
  if (g != ExactInt(1)) {
    num_ = num_ / g;
    den_ = den_ / g;
  }
}

Rational Rational::operator-() const { return Rational(Canonical{}, -num_, den_); }

Rational Rational::abs() const { return Rational(Canonical{}, num_.abs(), den_); }

Rational Rational::reciprocal() const {
  if (is_zero()) throw std::domain_error("Rational: reciprocal of zero");
  return num_.is_negative() ? Rational(Canonical{}, -den_, -num_)
                            : Rational(Canonical{}, den_, num_);
}

// a/b + c/d via Knuth's reduced scheme: with g = gcd(b, d), the only common
// factor the raw sum can pick up divides g, so one small gcd finishes the job.
Rational operator+(const Rational& a, const Rational& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  ExactInt g = gcd(a.den_, b.den_);
  if (g == ExactInt(1)) {
    return Rational(Rational::Canonical{}, a.num_ * b.den_ + b.num_ * a.den_,
                    a.den_ * b.den_);
  }
  ExactInt b_red = a.den_ / g;
  ExactInt d_red = b.den_ / g;
  ExactInt num = a.num_ * d_red + b.num_ * b_red;
  ExactInt h = gcd(num, g);
  if (h == ExactInt(1)) {
    return Rational(Rational::Canonical{}, std::move(num), b_red * b.den_);
  }
  return Rational(Rational::Canonical{}, num / h, b_red * (b.den_ / h));
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  if (a.is_zero() || b.is_zero()) return Rational();
  ExactInt g1 = gcd(a.num_, b.den_);
  ExactInt g2 = gcd(b.num_, a.den_);
  return Rational(Rational::Canonical{}, (a.num_ / g1) * (b.num_ / g2),
                  (a.den_ / g2) * (b.den_ / g1));
}

Rational operator/(const Rational& a, const Rational& b) { return a * b.reciprocal(); }

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  return a.num_ * b.den_ <=> b.num_ * a.den_;
}

std::string Rational::to_string() const {
  if (is_integer()) return num_.to_string();
  return num_.to_string() + "/" + den_.to_string();
}

Rational Rational::from_string(std::string_view text) {
  std::size_t slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(ExactInt::from_string(text));
  return Rational(ExactInt::from_string(text.substr(0, slash)),
                  ExactInt::from_string(text.substr(slash + 1)));
}

Rational falling_factorial(const Rational& x, int depth) {
  if (depth < 0) throw std::domain_error("falling_factorial: negative depth");
  Rational result(1);
  Rational term = x;
  for (int i = 0; i < depth; ++i) {
    result *= term;
    term -= Rational(1);
  }
  return result;
}

}  // namespace bernst
