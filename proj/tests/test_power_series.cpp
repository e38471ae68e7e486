#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "bernst/power_series.hpp"
#include "test_support.hpp"

using bernst::PowerSeries;
using bernst::Rational;
using testsupport::random_rational;

namespace {

PowerSeries random_unit_series(std::mt19937_64& rng, std::size_t order) {
  std::vector<Rational> coeffs(order);
  coeffs[0] = Rational(1 + static_cast<int>(rng() % 9));
  for (std::size_t k = 1; k < order; ++k) coeffs[k] = random_rational(rng, 30);
  return PowerSeries(order, std::move(coeffs));
}

}  // namespace

TEST_CASE("constructors pad or cut to the stated order") {
  PowerSeries s(4, {Rational(1), Rational(2)});
  CHECK(s.order() == 4);
  CHECK(s.coeff(2) == Rational(0));
  CHECK(s.coeff(3) == Rational(0));
  CHECK_THROWS_AS(s.coeff(4), std::out_of_range);
  CHECK(PowerSeries::one(3).coeff(0) == Rational(1));
  CHECK(PowerSeries::zero(2) == PowerSeries(2, {}));
}

TEST_CASE("log(1+t) and 1/(1+t) expansions") {
  PowerSeries log_series = PowerSeries::log1p(4);
  CHECK(log_series.coeffs() ==
        std::vector<Rational>{Rational(0), Rational(1), Rational(-1, 2), Rational(1, 3)});
  PowerSeries geom = PowerSeries::geometric(3);
  CHECK(geom.coeffs() == std::vector<Rational>{Rational(1), Rational(-1), Rational(1)});
  CHECK_THROWS_AS(PowerSeries::log1p(0), std::invalid_argument);
  CHECK_THROWS_AS(PowerSeries::geometric(0), std::invalid_argument);

  // (1+t) * 1/(1+t) = 1 up to the truncation.
  PowerSeries one_plus_t(10, {Rational(1), Rational(1)});
  CHECK(one_plus_t * PowerSeries::geometric(10) == PowerSeries::one(10));
}

TEST_CASE("shifted_down") {
  PowerSeries log_over_t = PowerSeries::log1p(6).shifted_down(1);
  CHECK(log_over_t.order() == 5);
  CHECK(log_over_t.coeff(0) == Rational(1));
  CHECK(log_over_t.coeff(1) == Rational(-1, 2));
  CHECK_THROWS_AS(PowerSeries::one(3).shifted_down(1), std::invalid_argument);
  CHECK_THROWS_AS(PowerSeries::one(3).shifted_down(4), std::invalid_argument);
}

TEST_CASE("division against hand-computed quotients") {
  CHECK(PowerSeries::one(5) / PowerSeries::one(5) == PowerSeries::one(5));

  // t/log(1+t) after cancelling one t: 1, 1/2, -1/12, ...
  PowerSeries quotient = PowerSeries::one(6) / PowerSeries::log1p(7).shifted_down(1);
  CHECK(quotient.coeff(0) == Rational(1));
  CHECK(quotient.coeff(1) == Rational(1, 2));
  CHECK(quotient.coeff(2) == Rational(-1, 12));
  // -1/12 * 2! is the second value of the integral route: -1/6.
  CHECK(quotient.coeff(2) * Rational(2) == Rational(-1, 6));

  CHECK_THROWS_AS(PowerSeries::one(3) / PowerSeries::log1p(3), std::domain_error);
  CHECK_THROWS_AS(PowerSeries::one(3) / PowerSeries::zero(3), std::domain_error);
}

TEST_CASE("the two routes to t/((1+t)log(1+t)) agree") {
  const std::size_t order = 20;
  PowerSeries log_over_t = PowerSeries::log1p(order + 1).shifted_down(1);
  PowerSeries direct = PowerSeries::geometric(order) / log_over_t;
  PowerSeries composed =
      (PowerSeries::one(order) / log_over_t) * PowerSeries::geometric(order);
  CHECK(direct == composed);
  CHECK(direct.coeff(0) == Rational(1));
  CHECK(direct.coeff(1) == Rational(-1, 2));
}

TEST_CASE("division inverts multiplication") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 40; ++i) {
    PowerSeries a(12, [&] {
      std::vector<Rational> coeffs(12);
      for (auto& c : coeffs) c = random_rational(rng, 30);
      return coeffs;
    }());
    PowerSeries b = random_unit_series(rng, 12);
    CHECK((a * b) / b == a);
    CHECK((a * b - b * a).coeffs() == PowerSeries::zero(12).coeffs());
  }
}

TEST_CASE("order of a binary result is the smaller operand order") {
  PowerSeries wide = PowerSeries::log1p(9);
  PowerSeries narrow = PowerSeries::log1p(4);
  CHECK((wide + narrow).order() == 4);
  CHECK((wide * narrow).order() == 4);
  CHECK((wide / PowerSeries::geometric(6)).order() == 6);
  // Truncation never looks past the stated order: widening an operand with
  // arbitrary junk beyond the shared order changes nothing.
  std::vector<Rational> junk = wide.coeffs();
  junk.resize(9);
  junk[7] = Rational(999);
  PowerSeries tweaked(9, std::move(junk));
  CHECK((tweaked + narrow) == (wide + narrow));
}
