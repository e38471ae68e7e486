#pragma once

#include <compare>
#include <string>
#include <string_view>

#include "bernst/exact_int.hpp"

namespace bernst {

/// Exact rational number in canonical form: denominator > 0 and
/// gcd(|numerator|, denominator) = 1, with zero stored as 0/1. Every
/// constructor and operator re-canonicalizes, so equality is structural.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long long value) : num_(value), den_(1) {}  // NOLINT: implicit by design
  Rational(int value) : num_(value), den_(1) {}        // NOLINT
  Rational(ExactInt value) : num_(std::move(value)), den_(1) {}  // NOLINT
  Rational(ExactInt numerator, ExactInt denominator);
  Rational(long long numerator, long long denominator)
      : Rational(ExactInt(numerator), ExactInt(denominator)) {}

  /// Parses "p" or "p/q" in decimal. Throws std::invalid_argument on
  /// malformed input and std::domain_error on a zero denominator.
  static Rational from_string(std::string_view text);

  const ExactInt& numerator() const { return num_; }
  const ExactInt& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_integer() const { return den_ == ExactInt(1); }
  int sign() const { return num_.sign(); }

  Rational operator-() const;
  Rational abs() const;
  Rational reciprocal() const;  // throws std::domain_error on zero

  Rational& operator+=(const Rational& other) { return *this = *this + other; }
  Rational& operator-=(const Rational& other) { return *this = *this - other; }
  Rational& operator*=(const Rational& other) { return *this = *this * other; }
  Rational& operator/=(const Rational& other) { return *this = *this / other; }

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);  // throws on b == 0

  friend bool operator==(const Rational& a, const Rational& b) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  /// "p/q" with q > 0 and gcd(p, q) = 1, or plain "p" for integers.
  std::string to_string() const;

 private:
  struct Canonical {};  // tag: parts are already in canonical form
  Rational(Canonical, ExactInt numerator, ExactInt denominator)
      : num_(std::move(numerator)), den_(std::move(denominator)) {}

  ExactInt num_;
  ExactInt den_;
};

/// Falling factorial x(x-1)...(x-depth+1); returns 1 for depth = 0.
/// Negative depth is rejected with std::domain_error.
Rational falling_factorial(const Rational& x, int depth);

inline std::string to_string(const Rational& value) { return value.to_string(); }

}  // namespace bernst
