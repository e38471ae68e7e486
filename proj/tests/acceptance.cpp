// Acceptance suite: one pass/fail line per criterion, exit 0 only if all
// criteria hold. Every comparison is exact rational equality; there are no
// tolerances anywhere.

#include <chrono>
#include <iostream>
#include <random>
#include <string>

#include <json.hpp>

#include "bernst/bernoulli.hpp"
#include "bernst/identities.hpp"
#include "bernst/polynomial.hpp"
#include "bernst/power_series.hpp"
#include "bernst/stirling.hpp"
#include "test_support.hpp"

using bernst::Basis;
using bernst::ExactInt;
using bernst::Polynomial;
using bernst::Rational;
using bernst::factorial;

namespace {

int failures = 0;

void record(int criterion, const std::string& description, bool ok,
            const std::string& detail = "") {
  std::cout << (ok ? "[PASS] " : "[FAIL] ") << "criterion " << criterion << ": "
            << description;
  if (!ok && !detail.empty()) std::cout << " (" << detail << ")";
  std::cout << '\n';
  if (!ok) ++failures;
}

// 1. Full identity suite through the CLI at default bounds; 26 exact passes.
void criterion1() {
  auto start = std::chrono::steady_clock::now();
  auto result = testsupport::run_command(std::string(BERNST_CLI_PATH) +
                                         " verify --identity all --format json 2>/dev/null");
  auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - start)
                     .count();
  bool ok = result.exit_code == 0;
  std::string detail = "exit=" + std::to_string(result.exit_code);
  if (ok) {
    auto doc = nlohmann::json::parse(result.output, nullptr, false);
    ok = !doc.is_discarded() && doc["reports"].size() == 26;
    if (ok) {
      for (const auto& report : doc["reports"]) {
        if (report["status"] != "pass") {
          ok = false;
          detail = report["id"].get<std::string>() + " failed";
        }
      }
    }
  }
  record(1, "verify --identity all passes 26/26 at default bounds (" +
                std::to_string(elapsed) + " ms)",
         ok, detail);
}

// 2. Cross-route agreement for both Bernoulli families up to n = 100.
void criterion2() {
  bool ok = true;
  std::string detail;
  auto first_recurrence = bernst::bernoulli_first_by_recurrence(100);
  auto second_series = bernst::bernoulli_second_by_series(100);
  for (int n = 0; n <= 100 && ok; ++n) {
    if (bernst::bernoulli_first(n) != first_recurrence[static_cast<std::size_t>(n)]) {
      ok = false;
      detail = "first kind mismatch at n=" + std::to_string(n);
    }
    Rational integral = bernst::bernoulli_second(n);
    if (integral != bernst::bernoulli_second_by_stirling_sum(n) ||
        integral != second_series[static_cast<std::size_t>(n)]) {
      ok = false;
      detail = "second kind mismatch at n=" + std::to_string(n);
    }
  }
  record(2, "both Bernoulli families agree across all routes for n <= 100", ok, detail);
}

// 3. Orthogonality of the two triangles as exact Kronecker deltas, n <= 40.
void criterion3() {
  bool ok = true;
  std::string detail;
  for (int n = 0; n <= 40 && ok; ++n) {
    for (int m = 0; m <= n && ok; ++m) {
      ExactInt forward;
      ExactInt backward;
      for (int i = m; i <= n; ++i) {
        forward += bernst::stirling1(n, i) * bernst::stirling2(i, m);
        backward += bernst::stirling2(n, i) * bernst::stirling1(i, m);
      }
      ExactInt expected(n == m ? 1 : 0);
      if (forward != expected || backward != expected) {
        ok = false;
        detail = "n=" + std::to_string(n) + " m=" + std::to_string(m);
      }
    }
  }
  record(3, "triangle orthogonality holds exactly for 0 <= m <= n <= 40", ok, detail);
}

// 4. Spot values of both triangles.
void criterion4() {
  bool ok = bernst::stirling1_unsigned(2, 1) == ExactInt(1) &&
            bernst::stirling1_unsigned(2, 2) == ExactInt(1) &&
            bernst::stirling1_unsigned(3, 1) == ExactInt(2) &&
            bernst::stirling1_unsigned(3, 2) == ExactInt(3) &&
            bernst::stirling1_unsigned(3, 3) == ExactInt(1);
  for (int m = 1; m <= 10 && ok; ++m) {
    ExactInt expected = factorial(m - 1);
    if ((m - 1) % 2) expected = -expected;
    ok = bernst::stirling1(m, 1) == expected && bernst::stirling2(m, 1) == ExactInt(1);
  }
  record(4, "triangle spot values (|s(2,.)|, |s(3,.)|, s(m,1), S(m,1))", ok);
}

// 5. First r-family: r=1 collapses to the plain alternating-factorial sum;
//    r=3 right-hand coefficients are exactly (1, 3/2, 1/2).
void criterion5() {
  bool ok = true;
  std::string detail;
  // At r=1 the left-hand sum is the alternating factorial-weighted sum over
  // S(n,k) and the right-hand side collapses to B_n alone; both must match
  // the production value and the independent recurrence route.
  auto by_recurrence = bernst::bernoulli_first_by_recurrence(40);
  for (int n = 0; n <= 40 && ok; ++n) {
    Rational lhs_r1;
    ExactInt fact(1);
    for (int k = 0; k <= n; ++k) {
      if (k > 0) fact *= ExactInt(k);
      ExactInt s2 = bernst::stirling2(n, k);
      if (s2.is_zero()) continue;
      Rational term(fact * s2, ExactInt(k + 1));
      lhs_r1 += (k % 2) ? -term : term;
    }
    Rational rhs_r1 =
        Rational(bernst::stirling1_unsigned(1, 1), factorial(0)) * bernst::bernoulli_first(n);
    if (lhs_r1 != rhs_r1 || lhs_r1 != by_recurrence[static_cast<std::size_t>(n)]) {
      ok = false;
      detail = "r=1 reduction mismatch at n=" + std::to_string(n);
    }
  }
  Rational half(1, 2);
  ok = ok && Rational(bernst::stirling1_unsigned(3, 1), factorial(2)) == Rational(1) &&
       Rational(bernst::stirling1_unsigned(3, 2), factorial(2)) == Rational(3, 2) &&
       Rational(bernst::stirling1_unsigned(3, 3), factorial(2)) == half;
  if (ok) {
    auto report = bernst::check_t5(5, 40);
    ok = report.passed;
    if (!ok && report.counterexample) detail = report.counterexample->params;
  }
  record(5, "T5 specializations: r=1 equals the alternating sum, r=3 weights are "
            "(1, 3/2, 1/2), full sweep passes",
         ok, detail);
}

// 6. Second r-family: lambda weights for r=2 and r=3, plus the full identity.
void criterion6() {
  bool ok = true;
  std::string detail;
  for (int n = 0; n <= 40 && ok; ++n) {
    if (bernst::lambda_coeff(2, n, 0) != Rational(n) ||
        bernst::lambda_coeff(2, n, 1) != Rational(1) ||
        bernst::lambda_coeff(3, n, 0) != Rational(static_cast<long long>(n) * n) ||
        bernst::lambda_coeff(3, n, 1) != Rational(2 * n + 1) ||
        bernst::lambda_coeff(3, n, 2) != Rational(1)) {
      ok = false;
      detail = "lambda mismatch at n=" + std::to_string(n);
    }
  }
  if (ok) {
    auto report = bernst::check_t6(5, 40);
    ok = report.passed;
    if (!ok && report.counterexample) detail = report.counterexample->params;
  }
  record(6, "T6 specializations: lambda weights (n,1) and (n^2,2n+1,1), full sweep passes",
         ok, detail);
}

// 7. Operator laws on 200 random polynomials of degree <= 25.
void criterion7() {
  bool ok = true;
  std::string detail;
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 200 && ok; ++i) {
    Basis basis = (i % 2) ? Basis::FallingFactorial : Basis::Monomial;
    Polynomial p = testsupport::random_polynomial(rng, basis, 25);
    if (delta(delta_inv(p)) != p) {
      ok = false;
      detail = "delta round trip, sample " + std::to_string(i);
    }
    Polynomial monomial = convert(p, Basis::Monomial);
    if (diff(antiderivative(monomial)) != monomial) {
      ok = false;
      detail = "derivative round trip, sample " + std::to_string(i);
    }
    Basis other = (basis == Basis::Monomial) ? Basis::FallingFactorial : Basis::Monomial;
    if (convert(convert(p, other), basis) != p) {
      ok = false;
      detail = "conversion round trip, sample " + std::to_string(i);
    }
  }
  record(7, "operator inverses and basis round trips are exact on 200 random "
            "polynomials of degree <= 25",
         ok, detail);
}

// 8. Series coefficients of t/((1+t)log(1+t)) match the partial sums, m <= 30.
void criterion8() {
  auto report = bernst::check_c5_remark_series(31);
  record(8, "series coefficients match the alternating partial sums for m <= 30",
         report.passed,
         report.counterexample ? report.counterexample->params : "");
}

// 9. Byte-identical output across repeated runs with a fixed seed.
void criterion9() {
  const std::string command = std::string(BERNST_CLI_PATH) +
                              " verify --identity all --seed 7 2>/dev/null";
  auto first = testsupport::run_command(command);
  auto second = testsupport::run_command(command);
  bool ok = first.exit_code == 0 && second.exit_code == 0 &&
            !first.output.empty() && first.output == second.output;
  record(9, "two runs of verify --identity all --seed 7 are byte-identical", ok);
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  if (failures == 0) {
    std::cout << "acceptance: all 9 criteria passed\n";
    return 0;
  }
  std::cout << "acceptance: " << failures << " criterion(s) failed\n";
  return 1;
}
