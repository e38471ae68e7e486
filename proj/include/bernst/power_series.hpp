#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "bernst/rational.hpp"

namespace bernst {

/// Truncated formal power series over the exact rationals: exactly `order`
/// stored coefficients (indices 0 .. order-1), nothing beyond the truncation
/// is ever read or produced. Binary operations truncate to the smaller of
/// the two operand orders.
class PowerSeries {
 public:
  /// Coefficient vector is padded with zeros or cut to `order` entries.
  PowerSeries(std::size_t order, std::vector<Rational> coeffs);

  static PowerSeries zero(std::size_t order);
  static PowerSeries one(std::size_t order);

  /// Maclaurin series of log(1+t): coefficient k is (-1)^(k-1)/k for k >= 1.
  /// Requires order >= 1 (std::invalid_argument otherwise).
  static PowerSeries log1p(std::size_t order);

  /// Maclaurin series of 1/(1+t): coefficient k is (-1)^k. Requires order >= 1.
  static PowerSeries geometric(std::size_t order);

  std::size_t order() const { return coeffs_.size(); }
  const Rational& coeff(std::size_t k) const;
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  /// Quotient by t^k: drops the first k coefficients, which must all be
  /// zero (std::invalid_argument otherwise); the order shrinks by k.
  PowerSeries shifted_down(std::size_t k) const;

  friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);

  /// Long division; den must have a nonzero constant term, else
  /// std::domain_error. The quotient q satisfies q * den == num up to the
  /// common order.
  friend PowerSeries operator/(const PowerSeries& num, const PowerSeries& den);

  friend bool operator==(const PowerSeries& a, const PowerSeries& b) = default;

  std::string to_string() const;

 private:
  std::vector<Rational> coeffs_;
};

}  // namespace bernst
