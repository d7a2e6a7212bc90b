#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "ussp/errors.hpp"
#include "ussp/nat.hpp"
#include "ussp/numtheory.hpp"

namespace ussp {

/// Ordered subset of W whose gcd divides s. Members are stored in selection
/// order: the scan runs from the largest weight down, so members[0] is the
/// first (largest) selection and members.back() is the smallest-indexed one,
/// which the chain solver uses as the final divider.
struct DivisorSubset {
  struct Member {
    std::size_t index;  // position in the originating weight list
    Nat weight;
  };

  std::vector<Member> members;
  Nat threshold_z{0u};  // z1; filled in by the chain solver's threshold op

  std::size_t k() const { return members.size(); }
};

namespace detail {

inline void check_sorted_weights(std::span<const Nat> weights) {
  if (weights.empty()) throw EmptyInputError("empty weight list");
  Nat prev = 0u;
  for (Nat w : weights) {
    if (w.is_zero()) throw std::invalid_argument("weights must be >= 1");
    if (w <= prev) throw std::invalid_argument("weights must be strictly increasing");
    prev = w;
  }
}

}  // namespace detail

/// Greedy scan from the largest weight down: select p_i exactly when the gcd
/// of (already selected + everything still unscanned below p_i) does not
/// divide s, and stop once the gcd of the selected members divides s.
/// Returns nullopt when gcd(W) does not divide s (the instance-level
/// infeasibility certificate). For s = 0 every weight divides the target;
/// the scan would select nothing, so the smallest weight is returned as the
/// canonical single-member subset.
inline std::optional<DivisorSubset> find_divisor_subset(Nat s, std::span<const Nat> weights) {
  detail::check_sorted_weights(weights);
  const std::size_t n = weights.size();

  std::vector<Nat> prefix_gcd(n);
  prefix_gcd[0] = weights[0];
  for (std::size_t i = 1; i < n; ++i) prefix_gcd[i] = gcd(prefix_gcd[i - 1], weights[i]);
  if (!divides(prefix_gcd[n - 1], s)) return std::nullopt;

  DivisorSubset subset;
  if (s.is_zero()) {
    subset.members.push_back({0, weights[0]});
    return subset;
  }

  Nat selected_gcd = 0u;
  for (std::size_t i = n; i-- > 0;) {
    // Working set at this point is weights[0..i]; everything above is gone.
    Nat rest_gcd = i > 0 ? prefix_gcd[i - 1] : Nat(0u);
    if (!divides(gcd(selected_gcd, rest_gcd), s)) {
      subset.members.push_back({i, weights[i]});
      selected_gcd = gcd(selected_gcd, weights[i]);
    }
    if (divides(selected_gcd, s)) break;
  }
  if (subset.members.empty() || !divides(selected_gcd, s)) {
    throw std::logic_error("find_divisor_subset: scan ended without a divisor subset");
  }
  return subset;
}

}  // namespace ussp
