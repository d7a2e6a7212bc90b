#pragma once

#include <string>

#include "ussp/nat.hpp"
#include "ussp/numtheory.hpp"

namespace ussp {

/// Exact non-negative rational on checked 128-bit parts, kept reduced.
struct Rational {
  Nat num{0u};
  Nat den{1u};

  static Rational of(Nat num, Nat den) {
    if (den.is_zero()) throw std::domain_error("rational with zero denominator");
    Nat g = gcd(num, den);
    if (g > Nat(1u)) {
      num = num / g;
      den = den / g;
    }
    return Rational{num, den};
  }

  Rational times(const Rational& o) const {
    // Cross-reduce before multiplying to keep the parts small.
    Nat g1 = gcd(num, o.den);
    Nat g2 = gcd(o.num, den);
    return Rational::of((num / g1) * (o.num / g2), (den / g2) * (o.den / g1));
  }

  /// 1 - this, requiring this <= 1.
  Rational complement() const { return Rational::of(den - num, den); }

  double to_double() const { return num.to_double() / den.to_double(); }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
  }

  /// Fixed two-decimal rendering, round half up.
  std::string str2() const {
    Nat hundredths = (num * Nat(200u) + den) / (den * Nat(2u));
    Nat whole = hundredths / Nat(100u);
    Nat frac = hundredths % Nat(100u);
    std::string f = frac.str();
    if (f.size() < 2) f.insert(f.begin(), '0');
    return whole.str() + "." + f;
  }
};

}  // namespace ussp
