#pragma once

#include <algorithm>
#include <cmath>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace classpower {

/// Arbitrary-precision nonnegative integer.
///
/// Class-power multiplicities grow like |K|^(n-1) and can leave the 64-bit
/// range well inside the configured group cap, so the multiset arithmetic
/// carries them exactly in this type. Only the handful of operations the
/// class algebra needs are provided.
class BigUint {
 public:
  BigUint() = default;

  BigUint(std::uint64_t v) {  // NOLINT(google-explicit-constructor)
    if (v != 0) {
      limbs_.push_back(static_cast<std::uint32_t>(v & 0xffffffffu));
      if (v >> 32) limbs_.push_back(static_cast<std::uint32_t>(v >> 32));
    }
  }

  bool is_zero() const { return limbs_.empty(); }

  bool fits_u64() const { return limbs_.size() <= 2; }

  std::uint64_t as_u64() const {
    std::uint64_t v = 0;
    if (limbs_.size() > 1) v = static_cast<std::uint64_t>(limbs_[1]) << 32;
    if (!limbs_.empty()) v |= limbs_[0];
    return v;
  }

  BigUint& operator+=(const BigUint& o) {
    limbs_.resize(std::max(limbs_.size(), o.limbs_.size()), 0u);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
      std::uint64_t s = carry + limbs_[i] + (i < o.limbs_.size() ? o.limbs_[i] : 0u);
      limbs_[i] = static_cast<std::uint32_t>(s & 0xffffffffu);
      carry = s >> 32;
    }
    if (carry) limbs_.push_back(static_cast<std::uint32_t>(carry));
    return *this;
  }

  friend BigUint operator+(BigUint a, const BigUint& b) { return a += b; }

  friend BigUint operator*(const BigUint& a, const BigUint& b) {
    if (a.is_zero() || b.is_zero()) return BigUint{};
    BigUint r;
    r.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0u);
    for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
      std::uint64_t carry = 0;
      for (std::size_t j = 0; j < b.limbs_.size(); ++j) {
        std::uint64_t cur = r.limbs_[i + j] +
                            static_cast<std::uint64_t>(a.limbs_[i]) * b.limbs_[j] + carry;
        r.limbs_[i + j] = static_cast<std::uint32_t>(cur & 0xffffffffu);
        carry = cur >> 32;
      }
      std::size_t k = i + b.limbs_.size();
      while (carry) {
        std::uint64_t cur = r.limbs_[k] + carry;
        r.limbs_[k] = static_cast<std::uint32_t>(cur & 0xffffffffu);
        carry = cur >> 32;
        ++k;
      }
    }
    r.trim();
    return r;
  }

  BigUint& operator*=(const BigUint& o) { return *this = *this * o; }

  friend bool operator==(const BigUint& a, const BigUint& b) { return a.limbs_ == b.limbs_; }

  friend std::strong_ordering operator<=>(const BigUint& a, const BigUint& b) {
    if (a.limbs_.size() != b.limbs_.size())
      return a.limbs_.size() <=> b.limbs_.size();
    for (std::size_t i = a.limbs_.size(); i-- > 0;) {
      if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] <=> b.limbs_[i];
    }
    return std::strong_ordering::equal;
  }

  static BigUint pow(std::uint64_t base, unsigned exp) {
    BigUint r{1};
    BigUint b{base};
    while (exp) {
      if (exp & 1u) r *= b;
      b *= b;
      exp >>= 1u;
    }
    return r;
  }

  /// Nearest double; loses precision past 2^53 like any double conversion.
  double to_double() const {
    double v = 0.0;
    for (std::size_t i = limbs_.size(); i-- > 0;) v = v * 4294967296.0 + limbs_[i];
    return v;
  }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::vector<std::uint32_t> work = limbs_;
    std::string digits;
    while (!work.empty()) {
      // divide the limb vector by 10^9, collecting the remainder
      std::uint64_t rem = 0;
      for (std::size_t i = work.size(); i-- > 0;) {
        std::uint64_t cur = (rem << 32) | work[i];
        work[i] = static_cast<std::uint32_t>(cur / 1000000000u);
        rem = cur % 1000000000u;
      }
      while (!work.empty() && work.back() == 0) work.pop_back();
      std::string chunk = std::to_string(rem);
      if (work.empty()) {
        digits = chunk + digits;
      } else {
        digits = std::string(9 - chunk.size(), '0') + chunk + digits;
      }
    }
    return digits;
  }

 private:
  void trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
  }

  std::vector<std::uint32_t> limbs_;  // little-endian base 2^32, no trailing zeros
};

}  // namespace classpower
