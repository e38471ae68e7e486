#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bernst {

/// Arbitrary-precision signed integer.
///
/// Sign-and-magnitude over little-endian 32-bit limbs. Zero is the empty
/// limb vector with a non-negative sign, so every value has exactly one
/// representation and operator== is plain structural comparison.
class ExactInt {
 public:
  ExactInt() = default;
  ExactInt(long long value);  // NOLINT: implicit by design, the scalar literals flow in everywhere
  ExactInt(int value) : ExactInt(static_cast<long long>(value)) {}

  /// Parses an optionally signed decimal string. Throws std::invalid_argument
  /// on anything else (empty string, stray characters).
  static ExactInt from_string(std::string_view text);

  bool is_zero() const { return limbs_.empty(); }
  bool is_negative() const { return negative_; }
  int sign() const { return is_zero() ? 0 : (negative_ ? -1 : 1); }
  bool is_even() const { return limbs_.empty() || (limbs_[0] & 1u) == 0; }

  ExactInt abs() const;
  ExactInt operator-() const;

  ExactInt& operator+=(const ExactInt& other);
  ExactInt& operator-=(const ExactInt& other);
  ExactInt& operator*=(const ExactInt& other);

  friend ExactInt operator+(const ExactInt& a, const ExactInt& b);
  friend ExactInt operator-(const ExactInt& a, const ExactInt& b);
  friend ExactInt operator*(const ExactInt& a, const ExactInt& b);

  /// Quotient truncated toward zero; remainder has the sign of the dividend.
  /// Throws std::domain_error when the divisor is zero.
  friend std::pair<ExactInt, ExactInt> divmod(const ExactInt& a, const ExactInt& b);
  friend ExactInt operator/(const ExactInt& a, const ExactInt& b);
  friend ExactInt operator%(const ExactInt& a, const ExactInt& b);

  friend bool operator==(const ExactInt& a, const ExactInt& b) = default;
  friend std::strong_ordering operator<=>(const ExactInt& a, const ExactInt& b);

  std::string to_string() const;

  /// True when the value fits in a signed 64-bit integer.
  bool fits_int64() const;
  std::int64_t to_int64() const;  // throws std::overflow_error if it does not fit

 private:
  static int compare_magnitude(const std::vector<std::uint32_t>& a,
                               const std::vector<std::uint32_t>& b);
  static std::vector<std::uint32_t> add_magnitude(const std::vector<std::uint32_t>& a,
                                                  const std::vector<std::uint32_t>& b);
  static std::vector<std::uint32_t> sub_magnitude(const std::vector<std::uint32_t>& a,
                                                  const std::vector<std::uint32_t>& b);
  static std::vector<std::uint32_t> mul_magnitude(const std::vector<std::uint32_t>& a,
                                                  const std::vector<std::uint32_t>& b);
  static void divmod_magnitude(const std::vector<std::uint32_t>& u,
                               const std::vector<std::uint32_t>& v,
                               std::vector<std::uint32_t>& quotient,
                               std::vector<std::uint32_t>& remainder);
  static void trim(std::vector<std::uint32_t>& limbs);
  void normalize();

  std::vector<std::uint32_t> limbs_;  // little-endian, no trailing zero limbs
  bool negative_ = false;             // always false for zero
};

/// Greatest common divisor of |a| and |b|; gcd(0, 0) = 0.
ExactInt gcd(const ExactInt& a, const ExactInt& b);

/// base^exponent by binary exponentiation; pow(x, 0) = 1 for every x.
ExactInt pow(const ExactInt& base, unsigned exponent);

/// Exact n!. Negative n is rejected with std::domain_error.
ExactInt factorial(int n);

/// Binomial coefficient C(n, k); zero when k > n. Negative n or k is
/// rejected with std::domain_error.
ExactInt binomial(int n, int k);

inline std::string to_string(const ExactInt& value) { return value.to_string(); }

}  // namespace bernst
