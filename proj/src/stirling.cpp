#include "bernst/stirling.hpp"

#include <mutex>
#include <stdexcept>

namespace bernst {

void StirlingTriangle::ensure_rows(int n) const {
  {
    std::shared_lock read_lock(mutex_);
    if (static_cast<std::size_t>(n) < rows_.size()) return;
  }
  std::unique_lock write_lock(mutex_);
  if (rows_.empty()) {
    rows_.push_back({ExactInt(1)});
  }
  while (rows_.size() <= static_cast<std::size_t>(n)) {
    const auto& prev = rows_.back();
    const int row_index = static_cast<int>(rows_.size());
    std::vector<ExactInt> row(static_cast<std::size_t>(row_index) + 1);
    row[0] = ExactInt(0);
    row[row_index] = ExactInt(1);
    for (int k = 1; k < row_index; ++k) {
      switch (kind_) {
        case StirlingKind::FirstSigned:
          row[k] = prev[k - 1] - ExactInt(row_index - 1) * prev[k];
          break;
        case StirlingKind::FirstUnsigned:
          row[k] = prev[k - 1] + ExactInt(row_index - 1) * prev[k];
          break;
        case StirlingKind::Second:
          row[k] = prev[k - 1] + ExactInt(k) * prev[k];
          break;
      }
    }
    rows_.push_back(std::move(row));
  }
}

ExactInt StirlingTriangle::at(int n, int k) const {
  if (n < 0 || k < 0) throw std::domain_error("StirlingTriangle: negative index");
  if (k > n) return ExactInt(0);
  ensure_rows(n);
  std::shared_lock read_lock(mutex_);
  return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

std::vector<ExactInt> StirlingTriangle::row(int n) const {
  if (n < 0) throw std::domain_error("StirlingTriangle: negative index");
  ensure_rows(n);
  std::shared_lock read_lock(mutex_);
  return rows_[static_cast<std::size_t>(n)];
}

const StirlingTriangle& stirling_triangle(StirlingKind kind) {
  static StirlingTriangle first_signed(StirlingKind::FirstSigned);
  static StirlingTriangle first_unsigned(StirlingKind::FirstUnsigned);
  static StirlingTriangle second(StirlingKind::Second);
  switch (kind) {
    case StirlingKind::FirstSigned:
      return first_signed;
    case StirlingKind::FirstUnsigned:
      return first_unsigned;
    case StirlingKind::Second:
    default:
      return second;
  }
}

ExactInt stirling1(int n, int k) {
  return stirling_triangle(StirlingKind::FirstSigned).at(n, k);
}

ExactInt stirling1_unsigned(int n, int k) {
  return stirling_triangle(StirlingKind::FirstUnsigned).at(n, k);
}

ExactInt stirling2(int n, int k) {
  return stirling_triangle(StirlingKind::Second).at(n, k);
}

}  // namespace bernst
