#pragma once

#include <shared_mutex>
#include <vector>

#include "bernst/polynomial.hpp"
#include "bernst/rational.hpp"

namespace bernst {

enum class BernoulliKind {
  First,   // B_n = B_n(0), with B_1 = -1/2
  Second,  // B*_n, Roman's normalization: n! times the coefficients of t/log(1+t)
};

/// Memoized cache of a Bernoulli family, grown on demand and retained for
/// the process lifetime. Production routes:
///   First:  B_n   = sum_i (-1)^i i!/(i+1) S(n,i)
///   Second: B*_n  = integral over [0,1] of X<n>, via the polynomial engine
/// Independent cross-check routes live alongside as free functions.
///
/// Values are append-only; concurrent readers are safe and growth is
/// serialized internally.
class BernoulliCache {
 public:
  explicit BernoulliCache(BernoulliKind kind) : kind_(kind) {}

  BernoulliKind kind() const { return kind_; }

  /// n-th number of the family. Throws std::domain_error for n < 0.
  Rational at(int n) const;

 private:
  void ensure_values(int n) const;

  BernoulliKind kind_;
  mutable std::shared_mutex mutex_;
  mutable std::vector<Rational> values_;
};

/// Process-wide shared cache for the given kind.
const BernoulliCache& bernoulli_cache(BernoulliKind kind);

Rational bernoulli_first(int n);
Rational bernoulli_second(int n);

/// Bernoulli polynomial in the monomial basis, degree n, leading
/// coefficient 1: sum_k C(n,k) B_{n-k} X^k.
Polynomial bernoulli_polynomial(int n);

/// Coefficient lambda(r,n,k) = sum_l C(r-1,l) S(r-1-l,k) n^l appearing in
/// the closed form of sum_k s(n,k)/(k+r); integer-valued. Requires r >= 1,
/// n >= 0 and 0 <= k <= r-1, else std::domain_error.
Rational lambda_coeff(int r, int n, int k);

// --- independent cross-check routes (used by the identity checkers) ---

/// B_0..B_max_n from the recurrence sum_{k<n} C(n,k) B_k = 0 (n >= 2) with
/// B_0 = 1, B_1 = -1/2; a computation path disjoint from the cache's.
std::vector<Rational> bernoulli_first_by_recurrence(int max_n);

/// B*_n as the row sum sum_i s(n,i)/(i+1) over the signed first-kind triangle.
Rational bernoulli_second_by_stirling_sum(int n);

/// B*_0..B*_max_n as n! times the coefficients of the quotient series
/// t/log(1+t), computed by exact power-series long division.
std::vector<Rational> bernoulli_second_by_series(int max_n);

}  // namespace bernst
