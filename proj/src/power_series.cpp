#include "bernst/power_series.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace bernst {

PowerSeries::PowerSeries(std::size_t order, std::vector<Rational> coeffs)
    : coeffs_(std::move(coeffs)) {
  coeffs_.resize(order);
}

PowerSeries PowerSeries::zero(std::size_t order) { return PowerSeries(order, {}); }

PowerSeries PowerSeries::one(std::size_t order) {
  return PowerSeries(order, {Rational(1)});
}

PowerSeries PowerSeries::log1p(std::size_t order) {
  if (order == 0) throw std::invalid_argument("PowerSeries::log1p: order must be >= 1");
  std::vector<Rational> coeffs(order);
  for (std::size_t k = 1; k < order; ++k) {
    coeffs[k] = Rational(k % 2 ? 1 : -1, static_cast<long long>(k));
  }
  return PowerSeries(order, std::move(coeffs));
}

PowerSeries PowerSeries::geometric(std::size_t order) {
  if (order == 0) throw std::invalid_argument("PowerSeries::geometric: order must be >= 1");
  std::vector<Rational> coeffs(order);
  for (std::size_t k = 0; k < order; ++k) {
    coeffs[k] = Rational(k % 2 ? -1 : 1);
  }
  return PowerSeries(order, std::move(coeffs));
}

const Rational& PowerSeries::coeff(std::size_t k) const {
  if (k >= coeffs_.size()) throw std::out_of_range("PowerSeries::coeff: beyond order");
  return coeffs_[k];
}

PowerSeries PowerSeries::shifted_down(std::size_t k) const {
  if (k > order()) throw std::invalid_argument("PowerSeries::shifted_down: shift beyond order");
  for (std::size_t i = 0; i < k; ++i) {
    if (!coeffs_[i].is_zero()) {
      throw std::invalid_argument("PowerSeries::shifted_down: nonzero low-order coefficient");
    }
  }
  return PowerSeries(order() - k,
                     std::vector<Rational>(coeffs_.begin() + static_cast<std::ptrdiff_t>(k),
                                           coeffs_.end()));
}

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
  std::size_t order = std::min(a.order(), b.order());
  std::vector<Rational> coeffs(order);
  for (std::size_t k = 0; k < order; ++k) coeffs[k] = a.coeffs_[k] + b.coeffs_[k];
  return PowerSeries(order, std::move(coeffs));
}

PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
  std::size_t order = std::min(a.order(), b.order());
  std::vector<Rational> coeffs(order);
  for (std::size_t k = 0; k < order; ++k) coeffs[k] = a.coeffs_[k] - b.coeffs_[k];
  return PowerSeries(order, std::move(coeffs));
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
  std::size_t order = std::min(a.order(), b.order());
  std::vector<Rational> coeffs(order);
  for (std::size_t i = 0; i < order; ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; i + j < order; ++j) {
      if (b.coeffs_[j].is_zero()) continue;
      coeffs[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return PowerSeries(order, std::move(coeffs));
}

PowerSeries operator/(const PowerSeries& num, const PowerSeries& den) {
  if (den.order() == 0 || den.coeffs_[0].is_zero()) {
    throw std::domain_error("PowerSeries /: divisor has zero constant term");
  }
  std::size_t order = std::min(num.order(), den.order());
  std::vector<Rational> quotient(order);
  for (std::size_t n = 0; n < order; ++n) {
    Rational acc = num.coeffs_[n];
    for (std::size_t j = 1; j <= n; ++j) {
      if (den.coeffs_[j].is_zero() || quotient[n - j].is_zero()) continue;
      acc -= den.coeffs_[j] * quotient[n - j];
    }
    quotient[n] = acc / den.coeffs_[0];
  }
  return PowerSeries(order, std::move(quotient));
}

std::string PowerSeries::to_string() const {
  std::string text = "[";
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (k) text += ", ";
    text += coeffs_[k].to_string();
  }
  return text + "]";
}

}  // namespace bernst
