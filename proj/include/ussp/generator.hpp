#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "ussp/chain_solver.hpp"
#include "ussp/errors.hpp"
#include "ussp/instance.hpp"
#include "ussp/nat.hpp"
#include "ussp/numtheory.hpp"
#include "ussp/subset_finder.hpp"

namespace ussp {

/// How the target is drawn relative to the chain threshold z1.
struct SStrategy {
  enum class Kind { above_threshold, below_threshold, uniform };

  Kind kind = Kind::uniform;
  Nat lo{0u};
  Nat hi{0u};

  static SStrategy above_threshold() { return {Kind::above_threshold, 0u, 0u}; }
  static SStrategy below_threshold() { return {Kind::below_threshold, 0u, 0u}; }
  static SStrategy uniform(Nat lo, Nat hi) { return {Kind::uniform, lo, hi}; }

  /// "above-threshold" | "below-threshold" | "uniform:LO:HI"
  static std::optional<SStrategy> parse(std::string_view text) {
    if (text == "above-threshold") return above_threshold();
    if (text == "below-threshold") return below_threshold();
    constexpr std::string_view prefix = "uniform:";
    if (text.substr(0, prefix.size()) == prefix) {
      std::string_view rest = text.substr(prefix.size());
      std::size_t colon = rest.find(':');
      if (colon == std::string_view::npos) return std::nullopt;
      auto lo = Nat::parse(rest.substr(0, colon));
      auto hi = Nat::parse(rest.substr(colon + 1));
      if (!lo || !hi) return std::nullopt;
      return uniform(*lo, *hi);
    }
    return std::nullopt;
  }
};

namespace detail {

/// Unbiased bounded draw from mt19937_64, bit-exact across platforms
/// (std::uniform_int_distribution is not).
inline std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("draw_below: zero bound");
  if (bound == 1) return 0;
  std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound + 1) % bound;
  for (;;) {
    std::uint64_t v = rng();
    if (v <= limit) return v % bound;
  }
}

inline uint128 draw_below_u128(std::mt19937_64& rng, uint128 bound) {
  if (bound == 0) throw std::invalid_argument("draw_below_u128: zero bound");
  if (bound <= ~std::uint64_t{0}) return draw_below(rng, static_cast<std::uint64_t>(bound));
  uint128 full = ~uint128{0};
  uint128 limit = full - (full % bound + 1) % bound;
  for (;;) {
    uint128 v = (uint128{rng()} << 64) | rng();
    if (v <= limit) return v % bound;
  }
}

/// n distinct values from [2, max_weight], ascending. Small ranges get a
/// partial Fisher-Yates shuffle; large ranges draw with rejection.
inline std::vector<Nat> draw_weights(std::mt19937_64& rng, std::size_t n, Nat max_weight) {
  uint128 available = max_weight.value() - 1;  // values 2..max_weight
  if (uint128{n} > available) {
    throw ValidationError("cannot draw " + std::to_string(n) + " distinct weights from [2, " +
                          max_weight.str() + "]");
  }
  std::vector<Nat> weights;
  weights.reserve(n);
  if (available <= 4096 || available <= uint128{4} * n) {
    std::vector<std::uint64_t> pool;
    pool.reserve(static_cast<std::size_t>(available));
    for (std::uint64_t v = 2; v <= max_weight.to_u64(); ++v) pool.push_back(v);
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t j = i + static_cast<std::size_t>(draw_below(rng, pool.size() - i));
      std::swap(pool[i], pool[j]);
      weights.emplace_back(pool[i]);
    }
  } else {
    std::set<uint128> seen;
    while (seen.size() < n) {
      uint128 v = 2 + draw_below_u128(rng, available);
      seen.insert(v);
    }
    for (uint128 v : seen) weights.push_back(Nat::from_u128(v));
  }
  std::sort(weights.begin(), weights.end());
  return weights;
}

/// Reference threshold for target drawing: z1 of the subset found for the
/// most generic divisible target, s = gcd(W).
inline Nat generic_threshold(std::span<const Nat> weights) {
  Nat g = gcd_set(weights);
  auto subset = find_divisor_subset(g, weights);
  if (!subset) throw std::logic_error("generic_threshold: gcd target must be feasible");
  return threshold_z(*subset);
}

}  // namespace detail

/// Deterministic instance generation: weights drawn without replacement from
/// [2, max_weight] and sorted; the target drawn per strategy. above-threshold
/// picks a multiple of gcd(W) in (z1, 2*z1 + 1000]; below-threshold picks
/// uniformly in [p1, z1].
inline Instance generate_instance(std::size_t n, Nat max_weight, SStrategy strategy,
                                  std::uint64_t seed) {
  if (n < 1) throw ValidationError("generate_instance: n must be >= 1");
  if (max_weight < Nat(2u) + Nat(static_cast<std::uint64_t>(n) - 1)) {
    throw ValidationError("generate_instance: max_weight too small for n distinct weights");
  }
  std::mt19937_64 rng(seed);
  Instance inst;
  inst.weights = detail::draw_weights(rng, n, max_weight);

  switch (strategy.kind) {
    case SStrategy::Kind::uniform: {
      if (strategy.lo > strategy.hi) {
        throw ValidationError("generate_instance: uniform range is empty");
      }
      uint128 span = strategy.hi.value() - strategy.lo.value() + 1;
      inst.target_s = strategy.lo + Nat::from_u128(detail::draw_below_u128(rng, span));
      break;
    }
    case SStrategy::Kind::above_threshold: {
      Nat g = gcd_set(inst.weights);
      Nat z = detail::generic_threshold(inst.weights);
      Nat top = z * Nat(2u) + Nat(1000u);
      uint128 m_lo = z.value() / g.value() + 1;
      uint128 m_hi = top.value() / g.value();
      if (m_lo > m_hi) {
        throw ValidationError("generate_instance: no multiple of gcd above the threshold");
      }
      uint128 m = m_lo + detail::draw_below_u128(rng, m_hi - m_lo + 1);
      inst.target_s = Nat::from_u128(m) * g;
      break;
    }
    case SStrategy::Kind::below_threshold: {
      Nat z = detail::generic_threshold(inst.weights);
      Nat p1 = inst.weights.front();
      if (z < p1) throw ValidationError("generate_instance: below-threshold range is empty");
      uint128 span = z.value() - p1.value() + 1;
      inst.target_s = p1 + Nat::from_u128(detail::draw_below_u128(rng, span));
      break;
    }
  }
  inst.validate();
  return inst;
}

}  // namespace ussp
