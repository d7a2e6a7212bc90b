#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "ussp/errors.hpp"

namespace ussp {

using uint128 = unsigned __int128;
using int128 = __int128;

/// Non-negative integer restricted to [0, 2^127 - 1]. Every arithmetic
/// operator is range-checked and throws OverflowError instead of wrapping,
/// including subtraction that would go negative.
class Nat {
 public:
  static constexpr uint128 max_value = (uint128{1} << 127) - 1;

  constexpr Nat() = default;

  template <std::unsigned_integral T>
  constexpr Nat(T v) : v_(v) {}  // NOLINT: implicit by design, always in range

  template <std::signed_integral T>
  constexpr Nat(T v) : v_(static_cast<std::uint64_t>(v)) {
    if (v < 0) throw OverflowError("Nat from negative value");
  }

  static constexpr Nat from_u128(uint128 v) {
    if (v > max_value) throw OverflowError("value exceeds 2^127 - 1");
    Nat n;
    n.v_ = v;
    return n;
  }

  constexpr uint128 value() const { return v_; }
  constexpr bool is_zero() const { return v_ == 0; }

  constexpr std::uint64_t to_u64() const {
    if (v_ > ~std::uint64_t{0}) throw OverflowError("value exceeds 64 bits");
    return static_cast<std::uint64_t>(v_);
  }

  double to_double() const { return static_cast<double>(v_); }

  friend constexpr Nat operator+(Nat a, Nat b) {
    if (b.v_ > max_value - a.v_) throw OverflowError("addition overflow");
    return raw(a.v_ + b.v_);
  }

  friend constexpr Nat operator-(Nat a, Nat b) {
    if (b.v_ > a.v_) throw OverflowError("subtraction below zero");
    return raw(a.v_ - b.v_);
  }

  friend constexpr Nat operator*(Nat a, Nat b) {
    if (a.v_ != 0 && b.v_ > max_value / a.v_) throw OverflowError("multiplication overflow");
    return raw(a.v_ * b.v_);
  }

  friend constexpr Nat operator/(Nat a, Nat b) {
    if (b.v_ == 0) throw std::domain_error("division by zero");
    return raw(a.v_ / b.v_);
  }

  friend constexpr Nat operator%(Nat a, Nat b) {
    if (b.v_ == 0) throw std::domain_error("modulo by zero");
    return raw(a.v_ % b.v_);
  }

  constexpr Nat& operator+=(Nat o) { return *this = *this + o; }
  constexpr Nat& operator-=(Nat o) { return *this = *this - o; }
  constexpr Nat& operator*=(Nat o) { return *this = *this * o; }
  constexpr Nat& operator/=(Nat o) { return *this = *this / o; }
  constexpr Nat& operator%=(Nat o) { return *this = *this % o; }

  friend constexpr bool operator==(Nat a, Nat b) { return a.v_ == b.v_; }
  friend constexpr std::strong_ordering operator<=>(Nat a, Nat b) {
    if (a.v_ < b.v_) return std::strong_ordering::less;
    if (a.v_ > b.v_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  std::string str() const {
    if (v_ == 0) return "0";
    std::string out;
    uint128 v = v_;
    while (v != 0) {
      out.insert(out.begin(), static_cast<char>('0' + static_cast<unsigned>(v % 10)));
      v /= 10;
    }
    return out;
  }

  /// Parses a plain decimal literal. Rejects empty input, non-digits and
  /// values outside the Nat range.
  static std::optional<Nat> parse(std::string_view text) {
    if (text.empty()) return std::nullopt;
    uint128 v = 0;
    for (char c : text) {
      if (c < '0' || c > '9') return std::nullopt;
      if (v > max_value / 10) return std::nullopt;
      v *= 10;
      uint128 digit = static_cast<uint128>(c - '0');
      if (digit > max_value - v) return std::nullopt;
      v += digit;
    }
    return raw(v);
  }

 private:
  static constexpr Nat raw(uint128 v) {
    Nat n;
    n.v_ = v;
    return n;
  }

  uint128 v_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, Nat n) { return os << n.str(); }

}  // namespace ussp
