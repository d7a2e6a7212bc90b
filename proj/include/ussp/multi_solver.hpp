#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ussp/chain_solver.hpp"
#include "ussp/errors.hpp"
#include "ussp/instance.hpp"
#include "ussp/nat.hpp"
#include "ussp/numtheory.hpp"
#include "ussp/rational.hpp"
#include "ussp/subset_finder.hpp"

namespace ussp {

/// What the retry loop did: one record per divisor subset it found, plus the
/// weights it deleted between attempts. Member indices refer to the original
/// instance weight list.
struct AttemptLog {
  struct Attempt {
    DivisorSubset subset;  // threshold_z filled
    ChainResult::Status outcome;
  };

  std::vector<Attempt> attempts;
  std::vector<Nat> removed;

  std::size_t subsets_found() const { return attempts.size(); }

  std::vector<Nat> thresholds() const {
    std::vector<Nat> zs;
    zs.reserve(attempts.size());
    for (const auto& a : attempts) zs.push_back(a.subset.threshold_z);
    return zs;
  }
};

struct MultiResult {
  enum class Status { solved, infeasible, not_found };

  Status status = Status::not_found;
  std::optional<Solution> solution;
  AttemptLog log;

  bool solved() const { return status == Status::solved; }
  bool infeasible() const { return status == Status::infeasible; }
  bool not_found() const { return status == Status::not_found; }
};

/// Retry wrapper for small targets: find a divisor subset of the working
/// set, chain-solve the target over that subset alone, and on a too-small
/// failure delete the subset's first member and try again. Success expands
/// the subset coefficients into a full-length vector with zeros elsewhere.
/// not_found is a genuine "gave up" (the method is incomplete by design),
/// distinct from the gcd infeasibility certificate.
inline MultiResult solve_multi(Nat s, std::span<const Nat> weights) {
  detail::check_sorted_weights(weights);
  const std::size_t n = weights.size();

  MultiResult result;
  if (!divides(gcd_set(weights), s)) {
    result.status = MultiResult::Status::infeasible;
    return result;
  }

  std::vector<Nat> working(weights.begin(), weights.end());
  std::vector<std::size_t> original_index(n);
  for (std::size_t i = 0; i < n; ++i) original_index[i] = i;

  for (std::size_t attempt = 0; attempt < n && !working.empty(); ++attempt) {
    auto subset_opt = find_divisor_subset(s, working);
    if (!subset_opt) break;  // no divisor subset remains in the working set
    DivisorSubset subset = std::move(*subset_opt);
    subset.threshold_z = threshold_z(subset);

    // The chain consumes the subset as its own instance, sorted ascending.
    std::vector<Nat> sub_weights;
    std::vector<std::size_t> sub_to_original;
    for (auto it = subset.members.rbegin(); it != subset.members.rend(); ++it) {
      sub_weights.push_back(it->weight);
      sub_to_original.push_back(original_index[it->index]);
    }
    std::size_t first_member_working_index = subset.members.front().index;

    // Log the subset against original instance indices.
    for (auto& m : subset.members) m.index = original_index[m.index];

    ChainResult chain = solve_chain(s, sub_weights);
    result.log.attempts.push_back({subset, chain.status});

    if (chain.solved()) {
      std::vector<Nat> coeffs(n, Nat(0u));
      for (std::size_t i = 0; i < sub_weights.size(); ++i) {
        coeffs[sub_to_original[i]] = chain.solution->coefficients[i];
      }
      result.solution = Solution::checked(s, weights, std::move(coeffs), MethodTag::multi);
      result.status = MultiResult::Status::solved;
      return result;
    }
    if (chain.infeasible()) {
      throw std::logic_error("solve_multi: chain rejected a divisor subset");
    }
    // Too small: delete the first member of the failed subset and retry.
    result.log.removed.push_back(working[first_member_working_index]);
    working.erase(working.begin() + static_cast<std::ptrdiff_t>(first_member_working_index));
    original_index.erase(original_index.begin() +
                         static_cast<std::ptrdiff_t>(first_member_working_index));
  }

  result.status = MultiResult::Status::not_found;
  return result;
}

/// Success-probability estimate for the retry loop, from the thresholds of
/// the subsets it can reach: p_fail is the product of (1 - z1/(2*zi)) with
/// z1 the first attempt's threshold. Each ratio is truncated to hundredths
/// before combining, which reproduces the two-decimal arithmetic the
/// estimate is quoted at; out-of-range ratios are clamped into [0, 1] and
/// flagged. Exact rational arithmetic throughout.
struct ProbabilityEstimate {
  std::vector<Nat> z_values;
  Rational p_fail{1u, 1u};
  Rational p_success{0u, 1u};
  bool clamped = false;
};

inline ProbabilityEstimate estimate_success(std::span<const Nat> z_values) {
  if (z_values.empty()) throw EmptyInputError("estimate_success: no thresholds");
  for (Nat z : z_values) {
    if (z.is_zero()) throw std::invalid_argument("estimate_success: thresholds must be >= 1");
  }

  ProbabilityEstimate est;
  est.z_values.assign(z_values.begin(), z_values.end());
  Nat z1 = z_values.front();

  Rational fail{1u, 1u};
  for (Nat zi : z_values) {
    Nat hundredths = (z1 * Nat(100u)) / (zi * Nat(2u));  // truncated ratio
    if (hundredths > Nat(100u)) {
      hundredths = 100u;
      est.clamped = true;
    }
    fail = fail.times(Rational::of(Nat(100u) - hundredths, 100u));
  }
  est.p_fail = fail;
  est.p_success = fail.complement();
  return est;
}

}  // namespace ussp
