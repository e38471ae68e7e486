#include "bernst/exact_int.hpp"

#include <bit>
#include <numeric>
#include <stdexcept>

namespace bernst {

namespace {

constexpr std::uint64_t kBase = std::uint64_t{1} << 32;

// Largest power of ten below 2^32; decimal I/O works in chunks of this size.
constexpr std::uint32_t kDecChunk = 1000000000u;
constexpr int kDecChunkDigits = 9;

}  // namespace

ExactInt::ExactInt(long long value) {
  if (value == 0) return;
  negative_ = value < 0;
  // Two's-complement negation via unsigned arithmetic; safe for LLONG_MIN.
  std::uint64_t magnitude =
      negative_ ? ~static_cast<std::uint64_t>(value) + 1 : static_cast<std::uint64_t>(value);
  limbs_.push_back(static_cast<std::uint32_t>(magnitude));
  if (magnitude >> 32) limbs_.push_back(static_cast<std::uint32_t>(magnitude >> 32));
}

void ExactInt::trim(std::vector<std::uint32_t>& limbs) {
  while (!limbs.empty() && limbs.back() == 0) limbs.pop_back();
}

void ExactInt::normalize() {
  trim(limbs_);
  if (limbs_.empty()) negative_ = false;
}

int ExactInt::compare_magnitude(const std::vector<std::uint32_t>& a,
                                const std::vector<std::uint32_t>& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

std::vector<std::uint32_t> ExactInt::add_magnitude(const std::vector<std::uint32_t>& a,
                                                   const std::vector<std::uint32_t>& b) {
  const auto& longer = a.size() >= b.size() ? a : b;
  const auto& shorter = a.size() >= b.size() ? b : a;
  std::vector<std::uint32_t> result;
  result.reserve(longer.size() + 1);
  std::uint64_t carry = 0;
  for (std::size_t i = 0; i < longer.size(); ++i) {
    std::uint64_t sum = carry + longer[i] + (i < shorter.size() ? shorter[i] : 0u);
    result.push_back(static_cast<std::uint32_t>(sum));
    carry = sum >> 32;
  }
  if (carry) result.push_back(static_cast<std::uint32_t>(carry));
  return result;
}

// Requires |a| >= |b|.
std::vector<std::uint32_t> ExactInt::sub_magnitude(const std::vector<std::uint32_t>& a,
                                                   const std::vector<std::uint32_t>& b) {
  std::vector<std::uint32_t> result;
  result.reserve(a.size());
  std::int64_t borrow = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::int64_t diff = static_cast<std::int64_t>(a[i]) - borrow -
                        (i < b.size() ? static_cast<std::int64_t>(b[i]) : 0);
    if (diff < 0) {
      diff += static_cast<std::int64_t>(kBase);
      borrow = 1;
    } else {
      borrow = 0;
    }
    result.push_back(static_cast<std::uint32_t>(diff));
  }
  trim(result);
  return result;
}

std::vector<std::uint32_t> ExactInt::mul_magnitude(const std::vector<std::uint32_t>& a,
                                                   const std::vector<std::uint32_t>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<std::uint32_t> result(a.size() + b.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    std::uint64_t carry = 0;
    for (std::size_t j = 0; j < b.size(); ++j) {
      std::uint64_t cur = result[i + j] +
                          static_cast<std::uint64_t>(a[i]) * b[j] + carry;
      result[i + j] = static_cast<std::uint32_t>(cur);
      carry = cur >> 32;
    }
    result[i + b.size()] = static_cast<std::uint32_t>(carry);
  }
  trim(result);
  return result;
}

// Knuth algorithm D on 32-bit limbs with 64-bit intermediates.
void ExactInt::divmod_magnitude(const std::vector<std::uint32_t>& u,
                                const std::vector<std::uint32_t>& v,
                                std::vector<std::uint32_t>& quotient,
                                std::vector<std::uint32_t>& remainder) {
  quotient.clear();
  remainder.clear();
  if (compare_magnitude(u, v) < 0) {
    remainder = u;
    return;
  }
  if (v.size() == 1) {
    const std::uint64_t divisor = v[0];
    quotient.assign(u.size(), 0);
    std::uint64_t rem = 0;
    for (std::size_t i = u.size(); i-- > 0;) {
      std::uint64_t cur = (rem << 32) | u[i];
      quotient[i] = static_cast<std::uint32_t>(cur / divisor);
      rem = cur % divisor;
    }
    trim(quotient);
    if (rem) remainder.push_back(static_cast<std::uint32_t>(rem));
    return;
  }

  const std::size_t n = v.size();
  const std::size_t m = u.size() - n;
  const int shift = std::countl_zero(v.back());

  std::vector<std::uint32_t> vn(n);
  for (std::size_t i = n; i-- > 1;) {
    vn[i] = (v[i] << shift) | (shift ? (v[i - 1] >> (32 - shift)) : 0u);
  }
  vn[0] = v[0] << shift;

  std::vector<std::uint32_t> un(u.size() + 1);
  un[u.size()] = shift ? (u.back() >> (32 - shift)) : 0u;
  for (std::size_t i = u.size(); i-- > 1;) {
    un[i] = (u[i] << shift) | (shift ? (u[i - 1] >> (32 - shift)) : 0u);
  }
  un[0] = u[0] << shift;

  quotient.assign(m + 1, 0);
  for (std::size_t j = m + 1; j-- > 0;) {
    std::uint64_t numerator = (static_cast<std::uint64_t>(un[j + n]) << 32) | un[j + n - 1];
    std::uint64_t qhat = numerator / vn[n - 1];
    std::uint64_t rhat = numerator % vn[n - 1];
    while (qhat >= kBase ||
           qhat * vn[n - 2] > ((rhat << 32) | un[j + n - 2])) {
      --qhat;
      rhat += vn[n - 1];
      if (rhat >= kBase) break;
    }

    // Multiply-and-subtract qhat * vn from un[j .. j+n].
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < n; ++i) {
      std::uint64_t product = qhat * vn[i];
      std::int64_t t = static_cast<std::int64_t>(un[i + j]) - borrow -
                       static_cast<std::int64_t>(product & 0xFFFFFFFFu);
      un[i + j] = static_cast<std::uint32_t>(t);
      borrow = static_cast<std::int64_t>(product >> 32) - (t >> 32);
    }
    std::int64_t t = static_cast<std::int64_t>(un[j + n]) - borrow;
    un[j + n] = static_cast<std::uint32_t>(t);

    quotient[j] = static_cast<std::uint32_t>(qhat);
    if (t < 0) {
      // qhat was one too large; add the divisor back.
      --quotient[j];
      std::uint64_t carry = 0;
      for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t sum = static_cast<std::uint64_t>(un[i + j]) + vn[i] + carry;
        un[i + j] = static_cast<std::uint32_t>(sum);
        carry = sum >> 32;
      }
      un[j + n] = static_cast<std::uint32_t>(un[j + n] + carry);
    }
  }

  trim(quotient);
  remainder.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    remainder[i] = (un[i] >> shift) |
                   (shift && i + 1 < un.size() ? (static_cast<std::uint64_t>(un[i + 1]) << (32 - shift)) & 0xFFFFFFFFu
                                               : 0u);
  }
  trim(remainder);
}

ExactInt ExactInt::abs() const {
  ExactInt result = *this;
  result.negative_ = false;
  return result;
}

ExactInt ExactInt::operator-() const {
  ExactInt result = *this;
  if (!result.is_zero()) result.negative_ = !result.negative_;
  return result;
}

ExactInt operator+(const ExactInt& a, const ExactInt& b) {
  ExactInt result;
  if (a.negative_ == b.negative_) {
    result.limbs_ = ExactInt::add_magnitude(a.limbs_, b.limbs_);
    result.negative_ = a.negative_;
  } else {
    int cmp = ExactInt::compare_magnitude(a.limbs_, b.limbs_);
    if (cmp == 0) return ExactInt();
    if (cmp > 0) {
      result.limbs_ = ExactInt::sub_magnitude(a.limbs_, b.limbs_);
      result.negative_ = a.negative_;
    } else {
      result.limbs_ = ExactInt::sub_magnitude(b.limbs_, a.limbs_);
      result.negative_ = b.negative_;
    }
  }
  result.normalize();
  return result;
}

ExactInt operator-(const ExactInt& a, const ExactInt& b) { return a + (-b); }

ExactInt operator*(const ExactInt& a, const ExactInt& b) {
  ExactInt result;
  result.limbs_ = ExactInt::mul_magnitude(a.limbs_, b.limbs_);
  result.negative_ = !result.limbs_.empty() && (a.negative_ != b.negative_);
  return result;
}

ExactInt& ExactInt::operator+=(const ExactInt& other) { return *this = *this + other; }
ExactInt& ExactInt::operator-=(const ExactInt& other) { return *this = *this - other; }
ExactInt& ExactInt::operator*=(const ExactInt& other) { return *this = *this * other; }

std::pair<ExactInt, ExactInt> divmod(const ExactInt& a, const ExactInt& b) {
  if (b.is_zero()) throw std::domain_error("ExactInt: division by zero");
  ExactInt quotient;
  ExactInt remainder;
  ExactInt::divmod_magnitude(a.limbs_, b.limbs_, quotient.limbs_, remainder.limbs_);
  quotient.negative_ = !quotient.limbs_.empty() && (a.negative_ != b.negative_);
  remainder.negative_ = !remainder.limbs_.empty() && a.negative_;
  return {std::move(quotient), std::move(remainder)};
}

ExactInt operator/(const ExactInt& a, const ExactInt& b) { return divmod(a, b).first; }
ExactInt operator%(const ExactInt& a, const ExactInt& b) { return divmod(a, b).second; }

std::strong_ordering operator<=>(const ExactInt& a, const ExactInt& b) {
  if (a.negative_ != b.negative_) {
    return a.negative_ ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  int cmp = ExactInt::compare_magnitude(a.limbs_, b.limbs_);
  if (a.negative_) cmp = -cmp;
  if (cmp < 0) return std::strong_ordering::less;
  if (cmp > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

bool ExactInt::fits_int64() const {
  if (limbs_.size() > 2) return false;
  if (limbs_.size() < 2) return true;
  std::uint64_t magnitude = (static_cast<std::uint64_t>(limbs_[1]) << 32) | limbs_[0];
  return negative_ ? magnitude <= (std::uint64_t{1} << 63)
                   : magnitude < (std::uint64_t{1} << 63);
}

std::int64_t ExactInt::to_int64() const {
  if (!fits_int64()) throw std::overflow_error("ExactInt: value does not fit in int64");
  std::uint64_t magnitude = 0;
  if (!limbs_.empty()) magnitude = limbs_[0];
  if (limbs_.size() == 2) magnitude |= static_cast<std::uint64_t>(limbs_[1]) << 32;
  return negative_ ? static_cast<std::int64_t>(~magnitude + 1)
                   : static_cast<std::int64_t>(magnitude);
}

std::string ExactInt::to_string() const {
  if (is_zero()) return "0";
  std::vector<std::uint32_t> chunks;  // base-10^9 digits, little-endian
  std::vector<std::uint32_t> work = limbs_;
  const std::vector<std::uint32_t> divisor{kDecChunk};
  while (!work.empty()) {
    std::vector<std::uint32_t> quotient;
    std::vector<std::uint32_t> remainder;
    divmod_magnitude(work, divisor, quotient, remainder);
    chunks.push_back(remainder.empty() ? 0u : remainder[0]);
    work = std::move(quotient);
  }
  std::string text = negative_ ? "-" : "";
  text += std::to_string(chunks.back());
  for (std::size_t i = chunks.size() - 1; i-- > 0;) {
    std::string part = std::to_string(chunks[i]);
    text.append(kDecChunkDigits - part.size(), '0');
    text += part;
  }
  return text;
}

ExactInt ExactInt::from_string(std::string_view text) {
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  if (text.empty()) throw std::invalid_argument("ExactInt: empty numeral");
  for (char c : text) {
    if (c < '0' || c > '9') throw std::invalid_argument("ExactInt: invalid digit in numeral");
  }
  ExactInt result;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t take = (text.size() - pos) % kDecChunkDigits;
    if (take == 0) take = kDecChunkDigits;
    std::uint32_t chunk = 0;
    std::uint32_t scale = 1;
    for (std::size_t i = 0; i < take; ++i) {
      chunk = chunk * 10 + static_cast<std::uint32_t>(text[pos + i] - '0');
      scale *= 10;
    }
    result *= ExactInt(static_cast<long long>(scale));
    result += ExactInt(static_cast<long long>(chunk));
    pos += take;
  }
  if (negative && !result.is_zero()) result.negative_ = true;
  return result;
}

ExactInt gcd(const ExactInt& a, const ExactInt& b) {
  ExactInt x = a.abs();
  ExactInt y = b.abs();
  while (!y.is_zero()) {
    if (x.fits_int64() && y.fits_int64()) {
      return ExactInt(static_cast<long long>(std::gcd(x.to_int64(), y.to_int64())));
    }
    ExactInt rem = x % y;
    x = std::move(y);
    y = std::move(rem);
  }
  return x;
}

ExactInt pow(const ExactInt& base, unsigned exponent) {
  ExactInt result(1);
  ExactInt square = base;
  while (exponent > 0) {
    if (exponent & 1u) result *= square;
    exponent >>= 1;
    if (exponent) square *= square;
  }
  return result;
}

ExactInt factorial(int n) {
  if (n < 0) throw std::domain_error("factorial: negative argument");
  ExactInt result(1);
  for (int i = 2; i <= n; ++i) result *= ExactInt(i);
  return result;
}

ExactInt binomial(int n, int k) {
  if (n < 0 || k < 0) throw std::domain_error("binomial: negative argument");
  if (k > n) return ExactInt();
  if (k > n - k) k = n - k;
  ExactInt result(1);
  for (int i = 1; i <= k; ++i) {
    // Each intermediate division is exact: result holds C(n, i-1) * (n-i+1).
    result *= ExactInt(n - i + 1);
    result = result / ExactInt(i);
  }
  return result;
}

}  // namespace bernst
