#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "ussp/errors.hpp"
#include "ussp/instance.hpp"
#include "ussp/nat.hpp"
#include "ussp/numtheory.hpp"
#include "ussp/subset_finder.hpp"
#include "ussp/two_term.hpp"

namespace ussp {

/// Replayable record of one chain solve: the per-member modular steps, the
/// optional distribution passes, and the residual left for the final divider.
struct ChainTrace {
  struct Step {
    std::size_t weight_index;  // into the instance weight list
    Nat modulus;               // the x the step solved against
    Nat coefficient;
    Nat residual_after;
  };
  struct SpreadStep {
    std::size_t weight_index;
    Nat coefficient;
  };

  std::vector<Step> steps;
  std::vector<SpreadStep> spread_steps;
  Nat final_residual{0u};
};

struct ChainResult {
  enum class Status { solved, infeasible, too_small };

  Status status = Status::infeasible;
  std::optional<Solution> solution;
  ChainTrace trace;
  std::optional<DivisorSubset> subset;  // absent only on the gcd certificate

  bool solved() const { return status == Status::solved; }
  bool infeasible() const { return status == Status::infeasible; }
  bool too_small() const { return status == Status::too_small; }
};

/// Sufficiency bound for the chain: sum of pairwise Frobenius numbers of
/// consecutive subset members in consumption order. Any larger target with
/// the right divisibility is solvable along the chain. Single-member subsets
/// get 0 (every multiple of the divisor is solvable).
inline Nat threshold_z(const DivisorSubset& subset) {
  if (subset.k() < 2) return Nat(0u);
  Nat total{0u};
  for (std::size_t i = 0; i + 1 < subset.members.size(); ++i) {
    Nat q = subset.members[i].weight;
    Nat r = subset.members[i + 1].weight;
    // q*r - q - r written as (q-1)*(r-1) - 1; members of a multi-element
    // subset are always >= 2, so the term is non-negative.
    total += (q - Nat(1u)) * (r - Nat(1u)) - Nat(1u);
  }
  return total;
}

/// Chain solve: walk the divisor subset, at each member solving the two-term
/// equation against the gcd of the remaining members so that the residual
/// keeps the divisibility needed downstream; the last member divides what is
/// left. With spread on, the residual is first spread across weights outside
/// the subset (two passes) before the final division. Every returned
/// Solution is re-verified by exact substitution.
inline ChainResult solve_chain(Nat s, std::span<const Nat> weights, bool spread = false) {
  detail::check_sorted_weights(weights);
  const std::size_t n = weights.size();

  ChainResult result;
  auto subset_opt = find_divisor_subset(s, weights);
  if (!subset_opt) {
    result.status = ChainResult::Status::infeasible;
    return result;
  }
  DivisorSubset subset = std::move(*subset_opt);
  subset.threshold_z = threshold_z(subset);
  const auto& members = subset.members;
  const std::size_t k = members.size();

  std::vector<Nat> coeffs(n, Nat(0u));
  std::vector<char> assigned(n, 0);
  Nat residual = s;

  if (k >= 2) {
    std::vector<Nat> suffix_gcd(k);
    suffix_gcd[k - 1] = members[k - 1].weight;
    for (std::size_t i = k - 1; i-- > 0;) {
      suffix_gcd[i] = gcd(members[i].weight, suffix_gcd[i + 1]);
    }
    if (!divides(suffix_gcd[0], s)) {
      throw std::logic_error("solve_chain: subset gcd does not divide target");
    }

    for (std::size_t i = 0; i + 1 < k; ++i) {
      Nat q = members[i].weight;
      Nat x = suffix_gcd[i + 1];  // for the last step this is q_k itself
      auto a2 = detail::a2_coefficient(residual, q, x);
      if (a2.kind == detail::A2Outcome::Kind::infeasible) {
        throw std::logic_error("solve_chain: chain step lost divisibility");
      }
      if (a2.kind == detail::A2Outcome::Kind::too_small) {
        result.status = ChainResult::Status::too_small;
        result.subset = std::move(subset);
        return result;
      }
      Nat y = a2.coefficient;
      Nat before = residual;
      residual = residual - q * y;
      coeffs[members[i].index] += y;
      assigned[members[i].index] = 1;
      result.trace.steps.push_back({members[i].index, x, y, residual});
      if (residual > before || !divides(x, residual)) {
        throw std::logic_error("solve_chain: step invariant violated");
      }
    }
  }

  const DivisorSubset::Member divider = members.back();
  assigned[divider.index] = 1;
  if (!divides(divider.weight, residual)) {
    throw std::logic_error("solve_chain: final divider does not divide residual");
  }

  std::size_t j = divider.index;
  if (spread) {
    // First pass: pair the current divider with each larger weight; when the
    // two-term step fits, charge the divider and hand the divider role on.
    for (std::size_t i = j + 1; i < n; ++i) {
      auto a2 = detail::a2_coefficient(residual, weights[j], weights[i]);
      if (a2.kind == detail::A2Outcome::Kind::infeasible) {
        throw std::logic_error("solve_chain: spread step lost divisibility");
      }
      if (a2.kind == detail::A2Outcome::Kind::too_small) {
        assigned[i] = 1;  // stays at zero
        continue;
      }
      Nat y = a2.coefficient;
      coeffs[j] += y;
      assigned[j] = 1;
      residual -= weights[j] * y;
      result.trace.spread_steps.push_back({j, y});
      j = i;
    }
    // Second pass: grant divider-many units to each still-unassigned smaller
    // weight while the residual stays a multiple of the divider.
    for (std::size_t i = 0; i < j; ++i) {
      if (assigned[i]) continue;
      assigned[i] = 1;
      // residual >= w_j * w_i, tested divisionwise to dodge overflow
      if (residual / weights[i] >= weights[j]) {
        coeffs[i] += weights[j];
        residual -= weights[i] * weights[j];
        result.trace.spread_steps.push_back({i, weights[j]});
      }
    }
    if (!divides(weights[j], residual)) {
      throw std::logic_error("solve_chain: spread broke divider divisibility");
    }
  }

  coeffs[j] += residual / weights[j];
  result.trace.final_residual = Nat(0u);
  result.status = ChainResult::Status::solved;
  result.solution = Solution::checked(s, weights, std::move(coeffs), MethodTag::chain);
  result.subset = std::move(subset);
  return result;
}

}  // namespace ussp
