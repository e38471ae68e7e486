#include "bernst/polynomial.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "bernst/stirling.hpp"

namespace bernst {

namespace {

void trim(std::vector<Rational>& coeffs) {
  while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
}

void require_basis(const Polynomial& p, Basis basis, const char* what) {
  if (p.basis() != basis) {
    throw std::invalid_argument(std::string(what) + ": operand not in the required basis");
  }
}

}  // namespace

Polynomial::Polynomial(Basis basis, std::vector<Rational> coeffs)
    : basis_(basis), coeffs_(std::move(coeffs)) {
  trim(coeffs_);
}

Polynomial Polynomial::term(Basis basis, int k, Rational coefficient) {
  if (k < 0) throw std::domain_error("Polynomial::term: negative exponent");
  if (coefficient.is_zero()) return Polynomial(basis);
  std::vector<Rational> coeffs(static_cast<std::size_t>(k) + 1);
  coeffs.back() = std::move(coefficient);
  return Polynomial(basis, std::move(coeffs));
}

Polynomial Polynomial::constant(Rational value, Basis basis) {
  return term(basis, 0, std::move(value));
}

Rational Polynomial::coeff(int i) const {
  if (i < 0 || static_cast<std::size_t>(i) >= coeffs_.size()) return Rational();
  return coeffs_[static_cast<std::size_t>(i)];
}

Polynomial Polynomial::operator-() const {
  Polynomial result(basis_);
  result.coeffs_.reserve(coeffs_.size());
  for (const auto& c : coeffs_) result.coeffs_.push_back(-c);
  return result;
}

Polynomial operator+(const Polynomial& p, const Polynomial& q) {
  if (p.basis_ != q.basis_) throw std::invalid_argument("Polynomial +: basis mismatch");
  std::vector<Rational> coeffs(std::max(p.coeffs_.size(), q.coeffs_.size()));
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    coeffs[i] = p.coeff(static_cast<int>(i)) + q.coeff(static_cast<int>(i));
  }
  return Polynomial(p.basis_, std::move(coeffs));
}

Polynomial operator-(const Polynomial& p, const Polynomial& q) { return p + (-q); }

Polynomial operator*(const Rational& scalar, const Polynomial& p) {
  if (scalar.is_zero()) return Polynomial(p.basis_);
  Polynomial result(p.basis_);
  result.coeffs_.reserve(p.coeffs_.size());
  for (const auto& c : p.coeffs_) result.coeffs_.push_back(scalar * c);
  return result;
}

Polynomial operator*(const Polynomial& p, const Polynomial& q) {
  require_basis(p, Basis::Monomial, "Polynomial *");
  require_basis(q, Basis::Monomial, "Polynomial *");
  if (p.is_zero() || q.is_zero()) return Polynomial(Basis::Monomial);
  std::vector<Rational> coeffs(p.coeffs_.size() + q.coeffs_.size() - 1);
  for (std::size_t i = 0; i < p.coeffs_.size(); ++i) {
    if (p.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < q.coeffs_.size(); ++j) {
      coeffs[i + j] += p.coeffs_[i] * q.coeffs_[j];
    }
  }
  return Polynomial(Basis::Monomial, std::move(coeffs));
}

std::string Polynomial::to_string() const {
  std::string text = "[";
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) text += ", ";
    text += coeffs_[i].to_string();
  }
  text += basis_ == Basis::Monomial ? "] (monomial)" : "] (falling)";
  return text;
}

Polynomial convert(const Polynomial& p, Basis target) {
  if (p.basis() == target) return p;
  const StirlingTriangle& triangle =
      stirling_triangle(target == Basis::Monomial ? StirlingKind::FirstSigned
                                                  : StirlingKind::Second);
  std::vector<Rational> coeffs(p.coeffs().size());
  for (int n = 0; n <= p.degree(); ++n) {
    const Rational& c = p.coeffs()[static_cast<std::size_t>(n)];
    if (c.is_zero()) continue;
    std::vector<ExactInt> row = triangle.row(n);
    for (int k = 0; k <= n; ++k) {
      if (row[static_cast<std::size_t>(k)].is_zero()) continue;
      coeffs[static_cast<std::size_t>(k)] += c * Rational(row[static_cast<std::size_t>(k)]);
    }
  }
  return Polynomial(target, std::move(coeffs));
}

Rational eval(const Polynomial& p, const Rational& x) {
  if (p.is_zero()) return Rational();
  if (p.basis() == Basis::Monomial) {
    // Horner.
    Rational result = p.coeffs().back();
    for (int i = p.degree() - 1; i >= 0; --i) {
      result = result * x + p.coeffs()[static_cast<std::size_t>(i)];
    }
    return result;
  }
  // sum_i c_i x(x-1)...(x-i+1), building the products incrementally.
  Rational result;
  Rational product(1);
  for (int i = 0; i <= p.degree(); ++i) {
    if (i > 0) product *= x - Rational(i - 1);
    const Rational& c = p.coeffs()[static_cast<std::size_t>(i)];
    if (!c.is_zero()) result += c * product;
  }
  return result;
}

Polynomial diff(const Polynomial& p) {
  require_basis(p, Basis::Monomial, "diff");
  if (p.degree() <= 0) return Polynomial(Basis::Monomial);
  std::vector<Rational> coeffs(static_cast<std::size_t>(p.degree()));
  for (int i = 1; i <= p.degree(); ++i) {
    coeffs[static_cast<std::size_t>(i - 1)] =
        Rational(i) * p.coeffs()[static_cast<std::size_t>(i)];
  }
  return Polynomial(Basis::Monomial, std::move(coeffs));
}

Polynomial translate(const Polynomial& p, const Rational& r) {
  require_basis(p, Basis::Monomial, "translate");
  if (p.is_zero() || r.is_zero()) return p;
  // Horner in X + r: result = (...(c_d (X+r) + c_{d-1})(X+r) + ...) + c_0.
  std::vector<Rational> result{p.coeffs().back()};
  for (int i = p.degree() - 1; i >= 0; --i) {
    result.push_back(Rational());
    for (std::size_t j = result.size(); j-- > 1;) {
      result[j] = result[j - 1] + r * result[j];
    }
    result[0] = r * result[0] + p.coeffs()[static_cast<std::size_t>(i)];
  }
  return Polynomial(Basis::Monomial, std::move(result));
}

Polynomial delta(const Polynomial& p) {
  if (p.basis() == Basis::FallingFactorial) {
    // X<n> drops to n X<n-1>.
    if (p.degree() <= 0) return Polynomial(Basis::FallingFactorial);
    std::vector<Rational> coeffs(static_cast<std::size_t>(p.degree()));
    for (int i = 1; i <= p.degree(); ++i) {
      coeffs[static_cast<std::size_t>(i - 1)] =
          Rational(i) * p.coeffs()[static_cast<std::size_t>(i)];
    }
    return Polynomial(Basis::FallingFactorial, std::move(coeffs));
  }
  return translate(p, Rational(1)) - p;
}

Polynomial delta_inv(const Polynomial& p) {
  // Lift termwise in the falling-factorial basis, where the inverse of the
  // degree-drop is division by the new depth; the lifted polynomial has no
  // constant term, so it already vanishes at 0.
  Polynomial falling = convert(p, Basis::FallingFactorial);
  std::vector<Rational> coeffs(falling.coeffs().size() + 1);
  for (int i = 0; i <= falling.degree(); ++i) {
    coeffs[static_cast<std::size_t>(i) + 1] =
        falling.coeffs()[static_cast<std::size_t>(i)] / Rational(i + 1);
  }
  Polynomial lifted(Basis::FallingFactorial, std::move(coeffs));
  return convert(lifted, p.basis());
}

Polynomial antiderivative(const Polynomial& p) {
  require_basis(p, Basis::Monomial, "antiderivative");
  if (p.is_zero()) return p;
  std::vector<Rational> coeffs(p.coeffs().size() + 1);
  for (int i = 0; i <= p.degree(); ++i) {
    coeffs[static_cast<std::size_t>(i) + 1] =
        p.coeffs()[static_cast<std::size_t>(i)] / Rational(i + 1);
  }
  return Polynomial(Basis::Monomial, std::move(coeffs));
}

Rational integrate01(const Polynomial& p) {
  Polynomial monomial = convert(p, Basis::Monomial);
  Rational result;
  for (int i = 0; i <= monomial.degree(); ++i) {
    const Rational& c = monomial.coeffs()[static_cast<std::size_t>(i)];
    if (!c.is_zero()) result += c / Rational(i + 1);
  }
  return result;
}

}  // namespace bernst
