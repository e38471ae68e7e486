#pragma once

#include <string>
#include <vector>

#include "bernst/rational.hpp"

namespace bernst {

enum class Basis {
  Monomial,          // coefficient i multiplies X^i
  FallingFactorial,  // coefficient i multiplies X(X-1)...(X-i+1)
};

/// Dense exact-rational polynomial tagged with the basis its coefficients
/// refer to. The zero polynomial is the empty coefficient vector (degree
/// reported as -1); trailing zero coefficients are always trimmed, so
/// equality is structural per basis.
///
/// Linear operations require both operands in the same basis and throw
/// std::invalid_argument otherwise; conversions are explicit via convert().
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(Basis basis) : basis_(basis) {}
  Polynomial(Basis basis, std::vector<Rational> coeffs);

  /// coefficient * X^k (or X<k> in the falling-factorial basis).
  static Polynomial term(Basis basis, int k, Rational coefficient = Rational(1));
  static Polynomial constant(Rational value, Basis basis = Basis::Monomial);

  Basis basis() const { return basis_; }
  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
  Rational coeff(int i) const;
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& p, const Polynomial& q);
  friend Polynomial operator-(const Polynomial& p, const Polynomial& q);
  friend Polynomial operator*(const Rational& scalar, const Polynomial& p);

  /// Product of two Monomial-basis polynomials (convert first otherwise).
  friend Polynomial operator*(const Polynomial& p, const Polynomial& q);

  friend bool operator==(const Polynomial& p, const Polynomial& q) = default;

  /// "[c0, c1, ...] (monomial|falling)" with exact coefficients, low degree first.
  std::string to_string() const;

 private:
  Basis basis_ = Basis::Monomial;
  std::vector<Rational> coeffs_;
};

/// Change of basis through the Stirling triangles:
///   X<n> = sum_k s(n,k) X^k     (falling -> monomial)
///   X^n  = sum_k S(n,k) X<k>    (monomial -> falling)
/// Converting to the polynomial's own basis is the identity.
Polynomial convert(const Polynomial& p, Basis target);

/// Exact evaluation at x (falling-basis terms via incremental products).
Rational eval(const Polynomial& p, const Rational& x);

/// d/dX. Monomial basis only.
Polynomial diff(const Polynomial& p);

/// Forward difference p(X+1) - p(X). Works in either basis: the
/// falling-factorial path maps X<n> to n X<n-1> termwise, the monomial path
/// goes through translate(); the two paths cross-check each other.
Polynomial delta(const Polynomial& p);

/// p(X + r). Monomial basis only.
Polynomial translate(const Polynomial& p, const Rational& r);

/// Right inverse of delta() pinned by delta_inv(p)(0) = 0; either basis,
/// result in the input basis. Satisfies delta(delta_inv(p)) == p.
Polynomial delta_inv(const Polynomial& p);

/// Antiderivative with constant term 0 (monomial basis only).
Polynomial antiderivative(const Polynomial& p);

/// Definite integral over [0,1] (either basis; converts internally).
Rational integrate01(const Polynomial& p);

inline std::string to_string(const Polynomial& p) { return p.to_string(); }

}  // namespace bernst
