#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bernst/exact_int.hpp"
#include "bernst/polynomial.hpp"
#include "bernst/rational.hpp"

namespace bernst {

/// The catalog of identities this library verifies mechanically. Every
/// comparison is exact rational equality; there is no tolerance anywhere.
enum class IdentityId {
  EQ5_ORTHO,              // sum_i s(n,i) S(i,m) = [n == m]
  EQ6_ORTHO,              // sum_i S(n,i) s(i,m) = [n == m]
  EQ9_DELTA_FALLING,      // delta X<n> = n X<n-1>
  EQ10_DELTA_BERN,        // delta B_n(X) = n X^(n-1)
  EQ11_DIFF_BERN,         // B_n'(X) = n B_{n-1}(X)
  EQ12_INT_BERN,          // integral_0^1 B_n = 0 for n >= 1
  EQ13_INT_FALLING,       // integral_0^1 X<n> = B*_n
  EQ14_BERN_EXPANSION,    // B_n(X) = sum_k C(n,k) B_{n-k} X^k
  EQ17_RISING,            // X(X+1)...(X+n-1) = sum_k |s(n,k)| X^k
  EQ18_RISING_SHIFTED,    // (X+1)...(X+n-1) = sum_k |s(n,k+1)| X^k
  EQ19_DELTAINV_FALLING,  // delta_inv X<n> = X<n+1>/(n+1)
  EQ20_DELTAINV_MONOMIAL, // delta_inv X^n = (B_{n+1}(X) - B_{n+1})/(n+1)
  T1,                     // B_n(X) = B_n + sum_k (n/k) S(n-1,k-1) X<k>
  C1,                     // B_n = -sum_k (n/k) S(n-1,k-1) B*_k
  L1_INVERSION,           // u = s-transform of v  <=>  v = S-transform of u
  T2,                     // B*_n = -sum_k (n/k) s(n-1,k-1) B_k
  T3,                     // X<n> = B*_n + sum_k (n/k) s(n-1,k-1) B_k(X)
  C2,                     // sum_i S(n-1,i-1) s(i,k)/i = C(n,k) B_{n-k}/n
  C3,                     // B_n = sum_i (-1)^i i!/(i+1) S(n,i)
  C4,                     // sum_i S(n,i) s(i,k)/i = C(n,k) B_{n-k}/n + [k == n-1]
  T4,                     // sum_i s(n-1,i-1) S(i,k)/i = C(n,k) B*_{n-k}/n
  C5,                     // sum_i s(n,i) S(i,k)/i = (-1)^(n-k) (n-1)!/k! * partial sum
  C5_REMARK_SERIES,       // coefficients of t/((1+t)log(1+t)) are those partial sums
  C6,                     // B*_n = sum_i s(n,i)/(i+1)
  T5,                     // sum_k (-1)^k k!/(k+r) S(n,k) = sum_k |s(r,k+1)| B_{n+k}/(r-1)!
  T6,                     // sum_k s(n,k)/(k+r) = sum_k lambda(r,n,k) B*_{n+k}
};

inline constexpr std::array<IdentityId, 26> kAllIdentityIds = {
    IdentityId::EQ5_ORTHO,       IdentityId::EQ6_ORTHO,
    IdentityId::EQ9_DELTA_FALLING, IdentityId::EQ10_DELTA_BERN,
    IdentityId::EQ11_DIFF_BERN,  IdentityId::EQ12_INT_BERN,
    IdentityId::EQ13_INT_FALLING, IdentityId::EQ14_BERN_EXPANSION,
    IdentityId::EQ17_RISING,     IdentityId::EQ18_RISING_SHIFTED,
    IdentityId::EQ19_DELTAINV_FALLING, IdentityId::EQ20_DELTAINV_MONOMIAL,
    IdentityId::T1,              IdentityId::C1,
    IdentityId::L1_INVERSION,    IdentityId::T2,
    IdentityId::T3,              IdentityId::C2,
    IdentityId::C3,              IdentityId::C4,
    IdentityId::T4,              IdentityId::C5,
    IdentityId::C5_REMARK_SERIES, IdentityId::C6,
    IdentityId::T5,              IdentityId::T6,
};

std::string_view to_string(IdentityId id);
std::optional<IdentityId> parse_identity_id(std::string_view name);

/// First parameter tuple at which an identity failed, with both exact values.
struct Counterexample {
  std::string params;
  std::string lhs;
  std::string rhs;
};

struct IdentityReport {
  IdentityId id{};
  std::string range;
  bool passed = true;
  std::uint64_t checks_performed = 0;
  std::optional<Counterexample> counterexample;
  std::string notes;
};

/// Accumulates exact comparisons into an IdentityReport. The first mismatch
/// becomes the counterexample and further comparisons are skipped (callers
/// observe this through the boolean results / keep_going()); the sweep for
/// one identity therefore stops at its first counterexample while the rest
/// of the suite continues.
class CheckRecorder {
 public:
  CheckRecorder(IdentityId id, std::string range);

  bool keep_going() const { return report_.passed; }

  bool expect_true(bool equal, std::string params, std::string lhs, std::string rhs);
  bool expect_equal(const Rational& lhs, const Rational& rhs, std::string params);
  bool expect_equal(const ExactInt& lhs, const ExactInt& rhs, std::string params);
  bool expect_equal(const Polynomial& lhs, const Polynomial& rhs, std::string params);

  void add_note(std::string note);

  IdentityReport take_report() { return std::move(report_); }

 private:
  IdentityReport report_;
};

/// Bounds for the verification sweeps. Defaults finish in well under a
/// minute at desk scale.
struct VerifyConfig {
  int max_n = 40;       // n (and k) sweep bound
  int max_r = 5;        // r bound for the two r-parameterized families
  int trials = 100;     // randomized inversion round-trips
  std::uint64_t seed = 0;
};

// One checker per identity. Bounds must be positive (std::invalid_argument
// otherwise); a failed identity is reported, never thrown.
IdentityReport check_eq5_orthogonality(int max_n);
IdentityReport check_eq6_orthogonality(int max_n);
IdentityReport check_eq9_delta_falling(int max_n);
IdentityReport check_eq10_delta_bernoulli(int max_n);
IdentityReport check_eq11_diff_bernoulli(int max_n);
IdentityReport check_eq12_integral_bernoulli(int max_n);
IdentityReport check_eq13_integral_falling(int max_n);
IdentityReport check_eq14_bernoulli_expansion(int max_n);
IdentityReport check_eq17_rising(int max_n);
IdentityReport check_eq18_rising_shifted(int max_n);
IdentityReport check_eq19_delta_inv_falling(int max_n);
IdentityReport check_eq20_delta_inv_monomial(int max_n);
IdentityReport check_t1(int max_n);
IdentityReport check_c1(int max_n);
IdentityReport check_l1_inversion(int trials, int max_n, std::uint64_t seed);
IdentityReport check_t2(int max_n);
IdentityReport check_t3(int max_n);
IdentityReport check_c2(int max_n);
IdentityReport check_c3(int max_n);
IdentityReport check_c4(int max_n);
IdentityReport check_t4(int max_n);
IdentityReport check_c5(int max_n);
IdentityReport check_c5_remark_series(int order);  // requires order >= 2
IdentityReport check_c6(int max_n);
IdentityReport check_t5(int max_r, int max_n);
IdentityReport check_t6(int max_r, int max_n);

/// Runs one identity with bounds taken from the config.
IdentityReport run_identity(IdentityId id, const VerifyConfig& config);

/// Runs the whole catalog in enum order. Deterministic given (config, seed).
std::vector<IdentityReport> run_all(const VerifyConfig& config);

}  // namespace bernst
