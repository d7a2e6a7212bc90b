#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <queue>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ussp/errors.hpp"
#include "ussp/instance.hpp"
#include "ussp/nat.hpp"
#include "ussp/numtheory.hpp"

namespace ussp {

/// Largest target (and residue-table size) the table-based oracles will
/// allocate for before refusing with CeilingExceededError.
inline constexpr std::uint64_t kDefaultOracleCeiling = 10'000'000;

namespace detail {

inline void check_oracle_weights(std::span<const Nat> weights) {
  if (weights.empty()) throw EmptyInputError("oracle: empty weight list");
  for (Nat w : weights) {
    if (w.is_zero()) throw std::invalid_argument("oracle: weights must be >= 1");
  }
}

}  // namespace detail

struct DpResult {
  std::optional<Solution> solution;  // empty means definitively infeasible
  bool gcd_certificate = false;      // infeasibility was proved by gcd alone

  bool feasible() const { return solution.has_value(); }
};

/// Ground-truth decision with witness: unbounded-knapsack reachability table
/// over 0..s, one first-found predecessor weight per reachable value.
inline DpResult dp_solve(Nat s, std::span<const Nat> weights,
                         std::uint64_t ceiling = kDefaultOracleCeiling) {
  detail::check_oracle_weights(weights);
  if (s.value() > ceiling) {
    throw CeilingExceededError("dp_solve: target " + s.str() + " exceeds ceiling");
  }
  if (!divides(gcd_set(weights), s)) return DpResult{std::nullopt, true};

  const std::uint64_t target = s.to_u64();
  const std::size_t n = weights.size();

  // Weights above the target can never contribute.
  std::vector<std::uint64_t> usable;
  std::vector<std::uint32_t> usable_idx;
  for (std::size_t i = 0; i < n; ++i) {
    if (weights[i] <= s) {
      usable.push_back(weights[i].to_u64());
      usable_idx.push_back(static_cast<std::uint32_t>(i));
    }
  }

  constexpr std::int32_t kUnreached = -1;
  constexpr std::int32_t kOrigin = -2;
  std::vector<std::int32_t> pred(target + 1, kUnreached);
  pred[0] = kOrigin;
  for (std::uint64_t v = 1; v <= target; ++v) {
    for (std::size_t j = 0; j < usable.size(); ++j) {
      std::uint64_t w = usable[j];
      if (w <= v && pred[v - w] != kUnreached) {
        pred[v] = static_cast<std::int32_t>(j);
        break;
      }
    }
  }
  if (pred[target] == kUnreached) return DpResult{std::nullopt, false};

  std::vector<Nat> coeffs(n, Nat(0u));
  for (std::uint64_t v = target; v != 0;) {
    std::size_t j = static_cast<std::size_t>(pred[v]);
    coeffs[usable_idx[j]] += Nat(1u);
    v -= usable[j];
  }
  return DpResult{Solution::checked(s, weights, std::move(coeffs), MethodTag::dp), false};
}

/// Per-residue-class (mod the smallest weight) minimum representable value.
/// s is representable iff the entry at s mod base is finite and <= s.
struct ResidueTable {
  static constexpr uint128 kUnreachable = ~uint128{0};

  Nat base;                            // smallest weight
  std::vector<uint128> min_reachable;  // kUnreachable marks an empty class
  std::vector<std::uint32_t> via;      // weight index that set the entry

  bool reachable(std::uint64_t residue) const {
    return min_reachable[residue] != kUnreachable;
  }
  Nat min_at(std::uint64_t residue) const {
    return Nat::from_u128(min_reachable[residue]);
  }
};

/// Dijkstra over the base residue classes: relaxing class r by weight w
/// reaches (r + w) mod base at cost w.
inline ResidueTable build_residue_table(std::span<const Nat> weights,
                                        std::uint64_t ceiling = kDefaultOracleCeiling) {
  detail::check_oracle_weights(weights);
  Nat base = weights[0];
  for (Nat w : weights) {
    if (w < base) base = w;
  }
  if (base.value() > ceiling) {
    throw CeilingExceededError("build_residue_table: base " + base.str() + " exceeds ceiling");
  }
  const std::uint64_t m = base.to_u64();

  ResidueTable table;
  table.base = base;
  table.min_reachable.assign(m, ResidueTable::kUnreachable);
  table.via.assign(m, 0);
  table.min_reachable[0] = 0;

  using Entry = std::pair<uint128, std::uint64_t>;  // (value, residue)
  auto cmp = [](const Entry& a, const Entry& b) { return a.first > b.first; };
  std::priority_queue<Entry, std::vector<Entry>, decltype(cmp)> queue(cmp);
  queue.push({0, 0});
  while (!queue.empty()) {
    auto [value, residue] = queue.top();
    queue.pop();
    if (value != table.min_reachable[residue]) continue;
    for (std::size_t i = 0; i < weights.size(); ++i) {
      uint128 w = weights[i].value();
      Nat next = Nat::from_u128(value) + Nat::from_u128(w);  // checked
      std::uint64_t r = static_cast<std::uint64_t>(next.value() % m);
      if (next.value() < table.min_reachable[r]) {
        table.min_reachable[r] = next.value();
        table.via[r] = static_cast<std::uint32_t>(i);
        queue.push({next.value(), r});
      }
    }
  }
  return table;
}

/// O(1) representability query against a prebuilt table.
inline bool residue_decide(const ResidueTable& table, Nat s) {
  std::uint64_t r = static_cast<std::uint64_t>(s.value() % table.base.value());
  return table.reachable(r) && table.min_reachable[r] <= s.value();
}

/// Bit r set iff r is a non-negative combination of the weights, r <= limit.
inline std::vector<bool> representable_set(Nat limit, std::span<const Nat> weights,
                                           std::uint64_t ceiling = kDefaultOracleCeiling) {
  detail::check_oracle_weights(weights);
  if (limit.value() > ceiling) {
    throw CeilingExceededError("representable_set: limit " + limit.str() + " exceeds ceiling");
  }
  const std::uint64_t top = limit.to_u64();
  std::vector<bool> bits(top + 1, false);
  bits[0] = true;
  for (Nat wn : weights) {
    if (wn > limit) continue;
    std::uint64_t w = wn.to_u64();
    for (std::uint64_t v = w; v <= top; ++v) {
      if (bits[v - w]) bits[v] = true;
    }
  }
  return bits;
}

}  // namespace ussp
