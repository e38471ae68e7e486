#pragma once

#include <shared_mutex>
#include <vector>

#include "bernst/exact_int.hpp"

namespace bernst {

enum class StirlingKind {
  FirstSigned,    // s(n,k): X(X-1)...(X-n+1) = sum_k s(n,k) X^k
  FirstUnsigned,  // |s(n,k)|: X(X+1)...(X+n-1) = sum_k |s(n,k)| X^k
  Second,         // S(n,k): X^n = sum_k S(n,k) X(X-1)...(X-k+1)
};

/// Memoized triangular table of Stirling numbers, grown row by row from the
/// recurrences
///   s(n,k)  = s(n-1,k-1) - (n-1) s(n-1,k)
///   |s|(n,k)= |s|(n-1,k-1) + (n-1) |s|(n-1,k)
///   S(n,k)  = S(n-1,k-1) + k S(n-1,k)
/// with rows[0][0] = 1. Queries outside the triangle (k > n) return 0.
///
/// Rows are append-only for the lifetime of the table; concurrent readers
/// are safe and growth is serialized internally.
class StirlingTriangle {
 public:
  explicit StirlingTriangle(StirlingKind kind) : kind_(kind) {}

  StirlingKind kind() const { return kind_; }

  /// Entry at (n, k); 0 when k > n. Throws std::domain_error for negative
  /// arguments. Grows the table as needed.
  ExactInt at(int n, int k) const;

  /// Copy of row n (k = 0..n).
  std::vector<ExactInt> row(int n) const;

 private:
  void ensure_rows(int n) const;

  StirlingKind kind_;
  mutable std::shared_mutex mutex_;
  mutable std::vector<std::vector<ExactInt>> rows_;
};

/// Process-wide shared triangle for the given kind.
const StirlingTriangle& stirling_triangle(StirlingKind kind);

ExactInt stirling1(int n, int k);           // signed first kind s(n,k)
ExactInt stirling1_unsigned(int n, int k);  // |s(n,k)|
ExactInt stirling2(int n, int k);           // second kind S(n,k)

}  // namespace bernst
