#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>

#include "ussp/errors.hpp"
#include "ussp/nat.hpp"
#include "ussp/numtheory.hpp"
#include "ussp/oracle.hpp"

namespace ussp {

/// Seed solution of y1*p1 + y2*p2 = s plus the size of the coset it
/// generates and the common divisor the triple was reduced by.
struct TwoTermWitness {
  Nat y1_star;
  Nat y2_star;
  Nat coset_count;     // number of non-negative solution pairs
  Nat common_divisor;  // e = gcd(p1, p2)
};

struct TwoTermResult {
  enum class Status { solved, infeasible, too_small };

  Status status = Status::infeasible;
  std::optional<TwoTermWitness> witness;

  bool solved() const { return status == Status::solved; }
  bool infeasible() const { return status == Status::infeasible; }
  bool too_small() const { return status == Status::too_small; }
};

namespace detail {

/// Core of the constant-time two-term step: the minimal coefficient
/// y of p with s - p*y divisible by m, after reducing by e = gcd(p, m).
/// Returns too_small when even the minimal y overshoots s.
struct A2Outcome {
  enum class Kind { value, infeasible, too_small };
  Kind kind = Kind::infeasible;
  Nat coefficient;
};

inline A2Outcome a2_coefficient(Nat s, Nat p, Nat m) {
  Nat e = gcd(p, m);
  if (!divides(e, s)) return {A2Outcome::Kind::infeasible, Nat(0u)};
  Nat rs = s / e;
  Nat rp = p / e;
  Nat rm = m / e;
  Nat y = 0u;
  if (rm > Nat(1u)) {
    auto inv = mod_inverse(rp % rm, rm);
    if (!inv) throw std::logic_error("a2: reduced pair not coprime");
    y = mulmod(rs, *inv, rm);
  }
  // p*y > s, tested as y > s/p so the product cannot overflow
  if (y > s / p) return {A2Outcome::Kind::too_small, y};
  return {A2Outcome::Kind::value, y};
}

}  // namespace detail

/// Solves y1*p1 + y2*p2 = s for 0 < p1 < p2. The modular inverse runs on the
/// gcd-reduced triple; the returned coefficients satisfy the original
/// equation and are verified by substitution before returning.
inline TwoTermResult solve_two(Nat s, Nat p1, Nat p2) {
  if (p1.is_zero() || p1 >= p2) throw std::invalid_argument("solve_two: need 0 < p1 < p2");
  Nat e = gcd(p1, p2);
  if (!divides(e, s)) return {TwoTermResult::Status::infeasible, std::nullopt};

  auto a2 = detail::a2_coefficient(s, p1, p2);
  if (a2.kind == detail::A2Outcome::Kind::too_small) {
    return {TwoTermResult::Status::too_small, std::nullopt};
  }
  Nat y1 = a2.coefficient;
  Nat y2 = (s - p1 * y1) / p2;
  if (y1 * p1 + y2 * p2 != s) throw std::logic_error("solve_two: witness failed substitution");

  Nat coset = y2 / (p1 / e) + Nat(1u);
  return {TwoTermResult::Status::solved, TwoTermWitness{y1, y2, coset, e}};
}

/// Number of non-negative solution pairs of y1*p1 + y2*p2 = s (0 when the
/// seed witness already overshoots). Throws InfeasibleError when gcd !| s.
inline Nat count_two(Nat s, Nat p1, Nat p2) {
  TwoTermResult r = solve_two(s, p1, p2);
  if (r.infeasible()) {
    throw InfeasibleError("count_two: gcd(" + p1.str() + "," + p2.str() +
                          ") does not divide " + s.str());
  }
  if (r.too_small()) return 0u;
  return r.witness->coset_count;
}

/// Largest integer with no non-negative representation by the coprime pair:
/// p1*p2 - p1 - p2.
inline Nat frobenius_two(Nat p1, Nat p2) {
  if (p1 <= Nat(1u) || p1 >= p2) throw std::invalid_argument("frobenius_two: need 1 < p1 < p2");
  if (gcd(p1, p2) != Nat(1u)) {
    throw NotCoprimeError("frobenius_two: gcd(" + p1.str() + "," + p2.str() + ") != 1");
  }
  return p1 * p2 - p1 - p2;
}

/// Closed-form count of representable integers in [0, s] for a coprime pair
/// with s at most the Frobenius number: ceil(s/p1) + sum of floor((s-i*p1)/p2)
/// for i = 0..k, k = ceil(s/p1) - 1, non-positive summands contributing 0.
/// The s = 0 case counts exactly the zero representation. The value is an
/// approximation of the exact count; compare against
/// count_representable_exact to audit it.
inline Nat count_representable_formula(Nat s, Nat p1, Nat p2) {
  if (p1 <= Nat(1u) || p1 >= p2) {
    throw std::invalid_argument("count_representable_formula: need 1 < p1 < p2");
  }
  if (gcd(p1, p2) != Nat(1u)) {
    throw NotCoprimeError("count_representable_formula: pair not coprime");
  }
  if (s > frobenius_two(p1, p2)) {
    throw std::invalid_argument("count_representable_formula: s above the Frobenius number");
  }
  Nat lead = s.is_zero() ? Nat(1u) : (s + p1 - Nat(1u)) / p1;  // ceil(s / p1)
  Nat total = lead;
  for (Nat i = 0u; i < lead; i += Nat(1u)) {
    Nat used = i * p1;
    if (used > s) break;  // clamped summand
    total += (s - used) / p2;
  }
  return total;
}

/// Exact count of representable integers in [0, s], any weight set; backed by
/// the oracle's bulk scan.
inline Nat count_representable_exact(Nat s, std::span<const Nat> weights,
                                     std::uint64_t ceiling = kDefaultOracleCeiling) {
  std::vector<bool> bits = representable_set(s, weights, ceiling);
  std::uint64_t count = 0;
  for (bool b : bits) count += b ? 1 : 0;
  return Nat(count);
}

}  // namespace ussp
