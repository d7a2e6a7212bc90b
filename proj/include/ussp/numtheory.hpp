#pragma once

#include <optional>
#include <span>
#include <stdexcept>

#include "ussp/errors.hpp"
#include "ussp/nat.hpp"

namespace ussp {

/// Euclidean gcd with gcd(a, 0) = a and gcd(0, 0) = 0.
constexpr Nat gcd(Nat a, Nat b) {
  uint128 x = a.value();
  uint128 y = b.value();
  while (y != 0) {
    uint128 r = x % y;
    x = y;
    y = r;
  }
  return Nat::from_u128(x);
}

/// Fold of gcd over a non-empty list; order-independent.
inline Nat gcd_set(std::span<const Nat> values) {
  if (values.empty()) throw EmptyInputError("gcd_set: empty list");
  Nat g = 0u;
  for (Nat v : values) g = gcd(g, v);
  return g;
}

/// d | n, with 0 dividing only 0.
constexpr bool divides(Nat d, Nat n) {
  if (d.is_zero()) return n.is_zero();
  return n.value() % d.value() == 0;
}

/// (a * b) mod m by binary doubling: exact for any operands in range, even
/// where the plain product would leave 128 bits.
constexpr Nat mulmod(Nat a, Nat b, Nat m) {
  if (m.is_zero()) throw std::invalid_argument("mulmod: modulus must be >= 1");
  uint128 mm = m.value();
  uint128 x = a.value() % mm;
  uint128 y = b.value() % mm;
  uint128 acc = 0;
  while (y != 0) {
    if (y & 1) acc = (acc + x) % mm;  // both terms < 2^127, no wrap
    x = (x + x) % mm;
    y >>= 1;
  }
  return Nat::from_u128(acc);
}

/// Inverse of a modulo m when gcd(a, m) = 1; the m = 1 convention returns 0.
/// Extended Euclid on signed 128-bit values (both operands fit by the Nat
/// range bound).
inline std::optional<Nat> mod_inverse(Nat a, Nat m) {
  if (m.is_zero()) throw std::invalid_argument("mod_inverse: modulus must be >= 1");
  if (m == Nat(1u)) return Nat(0u);

  int128 r0 = static_cast<int128>(m.value());
  int128 r1 = static_cast<int128>(a.value() % m.value());
  int128 t0 = 0;
  int128 t1 = 1;
  while (r1 != 0) {
    int128 q = r0 / r1;
    int128 r2 = r0 - q * r1;
    int128 t2 = t0 - q * t1;
    r0 = r1;
    r1 = r2;
    t0 = t1;
    t1 = t2;
  }
  if (r0 != 1) return std::nullopt;
  if (t0 < 0) t0 += static_cast<int128>(m.value());
  return Nat::from_u128(static_cast<uint128>(t0));
}

}  // namespace ussp
