#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "ussp/chain_solver.hpp"
#include "ussp/instance.hpp"
#include "ussp/multi_solver.hpp"
#include "ussp/oracle.hpp"

namespace ussp {

enum class SolveMethod { automatic, chain, multi, dp };

inline std::optional<SolveMethod> parse_method(std::string_view text) {
  if (text == "auto") return SolveMethod::automatic;
  if (text == "chain") return SolveMethod::chain;
  if (text == "multi") return SolveMethod::multi;
  if (text == "dp") return SolveMethod::dp;
  return std::nullopt;
}

struct DispatchResult {
  enum class Status { solved, infeasible, not_found };

  Status status = Status::not_found;
  std::optional<Solution> solution;
  std::string certificate;  // set for infeasible outcomes

  bool solved() const { return status == Status::solved; }
  bool infeasible() const { return status == Status::infeasible; }
  bool not_found() const { return status == Status::not_found; }
};

namespace detail {

inline std::string gcd_certificate(const Instance& inst) {
  return "gcd=" + gcd_set(inst.weights).str();
}

}  // namespace detail

/// Method dispatch. auto runs chain, then multi, then the dp oracle, and
/// returns the first definitive outcome; within the oracle ceiling it never
/// answers not_found. Solutions are re-verified before being returned.
inline DispatchResult run_solve(const Instance& inst, SolveMethod method, bool spread = false,
                                std::uint64_t ceiling = kDefaultOracleCeiling) {
  inst.validate();
  DispatchResult out;

  auto emit = [&](std::optional<Solution> sol) {
    if (!sol || !solution_satisfies(inst.target_s, inst.weights, sol->coefficients)) {
      throw std::logic_error("run_solve: unverified solution");
    }
    out.status = DispatchResult::Status::solved;
    out.solution = std::move(sol);
  };
  auto run_chain = [&]() -> ChainResult { return solve_chain(inst.target_s, inst.weights, spread); };
  auto run_dp = [&]() {
    DpResult dp = dp_solve(inst.target_s, inst.weights, ceiling);
    if (dp.feasible()) {
      emit(std::move(dp.solution));
    } else {
      out.status = DispatchResult::Status::infeasible;
      out.certificate = dp.gcd_certificate ? detail::gcd_certificate(inst) : "exhausted";
    }
  };

  switch (method) {
    case SolveMethod::chain: {
      ChainResult r = run_chain();
      if (r.solved())
        emit(std::move(r.solution));
      else if (r.infeasible()) {
        out.status = DispatchResult::Status::infeasible;
        out.certificate = detail::gcd_certificate(inst);
      }
      return out;
    }
    case SolveMethod::multi: {
      MultiResult r = solve_multi(inst.target_s, inst.weights);
      if (r.solved())
        emit(std::move(r.solution));
      else if (r.infeasible()) {
        out.status = DispatchResult::Status::infeasible;
        out.certificate = detail::gcd_certificate(inst);
      }
      return out;
    }
    case SolveMethod::dp:
      run_dp();
      return out;
    case SolveMethod::automatic: {
      ChainResult chain = run_chain();
      if (chain.solved()) {
        emit(std::move(chain.solution));
        return out;
      }
      if (chain.infeasible()) {
        out.status = DispatchResult::Status::infeasible;
        out.certificate = detail::gcd_certificate(inst);
        return out;
      }
      MultiResult multi = solve_multi(inst.target_s, inst.weights);
      if (multi.solved()) {
        emit(std::move(multi.solution));
        return out;
      }
      if (multi.infeasible()) {
        out.status = DispatchResult::Status::infeasible;
        out.certificate = detail::gcd_certificate(inst);
        return out;
      }
      run_dp();
      return out;
    }
  }
  return out;
}

}  // namespace ussp
