#include "bernst/bernoulli.hpp"

#include <mutex>
#include <stdexcept>

#include "bernst/power_series.hpp"
#include "bernst/stirling.hpp"

namespace bernst {

namespace {

// B_n = sum_{i=0}^{n} (-1)^i i!/(i+1) S(n,i)
Rational first_kind_from_stirling(int n) {
  Rational sum;
  ExactInt fact(1);
  for (int i = 0; i <= n; ++i) {
    if (i > 0) fact *= ExactInt(i);
    ExactInt s2 = stirling2(n, i);
    if (s2.is_zero()) continue;
    Rational term(fact * s2, ExactInt(i + 1));
    sum += (i % 2) ? -term : term;
  }
  return sum;
}

// B*_n = integral over [0,1] of the falling-factorial power X<n>.
Rational second_kind_from_integral(int n) {
  return integrate01(Polynomial::term(Basis::FallingFactorial, n));
}

}  // namespace

void BernoulliCache::ensure_values(int n) const {
  {
    std::shared_lock read_lock(mutex_);
    if (static_cast<std::size_t>(n) < values_.size()) return;
  }
  std::unique_lock write_lock(mutex_);
  while (values_.size() <= static_cast<std::size_t>(n)) {
    const int next = static_cast<int>(values_.size());
    values_.push_back(kind_ == BernoulliKind::First ? first_kind_from_stirling(next)
                                                    : second_kind_from_integral(next));
  }
}

Rational BernoulliCache::at(int n) const {
  if (n < 0) throw std::domain_error("BernoulliCache: negative index");
  ensure_values(n);
  std::shared_lock read_lock(mutex_);
  return values_[static_cast<std::size_t>(n)];
}

const BernoulliCache& bernoulli_cache(BernoulliKind kind) {
  static BernoulliCache first(BernoulliKind::First);
  static BernoulliCache second(BernoulliKind::Second);
  return kind == BernoulliKind::First ? first : second;
}

Rational bernoulli_first(int n) { return bernoulli_cache(BernoulliKind::First).at(n); }

Rational bernoulli_second(int n) { return bernoulli_cache(BernoulliKind::Second).at(n); }

Polynomial bernoulli_polynomial(int n) {
  if (n < 0) throw std::domain_error("bernoulli_polynomial: negative index");
  std::vector<Rational> coeffs(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    coeffs[static_cast<std::size_t>(k)] = Rational(binomial(n, k)) * bernoulli_first(n - k);
  }
  return Polynomial(Basis::Monomial, std::move(coeffs));
}

Rational lambda_coeff(int r, int n, int k) {
  if (r < 1) throw std::domain_error("lambda_coeff: r must be >= 1");
  if (n < 0) throw std::domain_error("lambda_coeff: n must be >= 0");
  if (k < 0 || k > r - 1) throw std::domain_error("lambda_coeff: k out of range 0..r-1");
  ExactInt sum;
  for (int l = 0; l <= r - 1 - k; ++l) {
    ExactInt s2 = stirling2(r - 1 - l, k);
    if (s2.is_zero()) continue;
    sum += binomial(r - 1, l) * s2 * pow(ExactInt(n), static_cast<unsigned>(l));
  }
  return Rational(sum);
}

std::vector<Rational> bernoulli_first_by_recurrence(int max_n) {
  if (max_n < 0) throw std::domain_error("bernoulli_first_by_recurrence: negative bound");
  std::vector<Rational> values;
  values.reserve(static_cast<std::size_t>(max_n) + 1);
  values.push_back(Rational(1));
  if (max_n >= 1) values.push_back(Rational(-1, 2));
  for (int n = 2; n <= max_n; ++n) {
    Rational acc;
    for (int k = 0; k < n; ++k) {
      acc += Rational(binomial(n + 1, k)) * values[static_cast<std::size_t>(k)];
    }
    values.push_back(-acc / Rational(n + 1));
  }
  return values;
}

Rational bernoulli_second_by_stirling_sum(int n) {
  if (n < 0) throw std::domain_error("bernoulli_second_by_stirling_sum: negative index");
  Rational sum;
  for (int i = 0; i <= n; ++i) {
    ExactInt s1 = stirling1(n, i);
    if (s1.is_zero()) continue;
    sum += Rational(s1, ExactInt(i + 1));
  }
  return sum;
}

std::vector<Rational> bernoulli_second_by_series(int max_n) {
  if (max_n < 0) throw std::domain_error("bernoulli_second_by_series: negative bound");
  const std::size_t order = static_cast<std::size_t>(max_n) + 1;
  // t/log(1+t) after cancelling one t: numerator 1, denominator log(1+t)/t.
  PowerSeries quotient = PowerSeries::one(order) / PowerSeries::log1p(order + 1).shifted_down(1);
  std::vector<Rational> values(order);
  ExactInt fact(1);
  for (int n = 0; n <= max_n; ++n) {
    if (n > 0) fact *= ExactInt(n);
    values[static_cast<std::size_t>(n)] = quotient.coeff(static_cast<std::size_t>(n)) * Rational(fact);
  }
  return values;
}

}  // namespace bernst
