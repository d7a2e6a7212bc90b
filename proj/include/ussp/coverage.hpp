#pragma once

#include <cstdint>
#include <cstdio>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include "ussp/chain_solver.hpp"
#include "ussp/multi_solver.hpp"
#include "ussp/nat.hpp"
#include "ussp/oracle.hpp"

namespace ussp {

/// Per-target outcomes of one s-range sweep plus the aggregate rates.
struct CoverageReport {
  struct Row {
    Nat s;
    bool oracle_feasible;
    ChainResult::Status alg3;
    MultiResult::Status alg4;
    bool agree;  // no solver verdict contradicts the oracle
  };

  std::vector<Nat> weights;
  Nat s_min;
  Nat s_max;
  std::vector<Row> rows;
  std::size_t oracle_count = 0;
  std::size_t alg3_count = 0;
  std::size_t alg4_count = 0;
  std::optional<ProbabilityEstimate> estimate;  // from attempt thresholds at s_min

  std::size_t total() const { return rows.size(); }
  double oracle_rate() const { return total() ? double(oracle_count) / double(total()) : 0.0; }
  double alg3_rate() const { return total() ? double(alg3_count) / double(total()) : 0.0; }
  double alg4_rate() const { return total() ? double(alg4_count) / double(total()) : 0.0; }
};

namespace detail {

inline const char* alg3_name(ChainResult::Status s) {
  switch (s) {
    case ChainResult::Status::solved: return "solved";
    case ChainResult::Status::infeasible: return "infeasible";
    case ChainResult::Status::too_small: return "toosmall";
  }
  return "?";
}

inline const char* alg4_name(MultiResult::Status s) {
  switch (s) {
    case MultiResult::Status::solved: return "solved";
    case MultiResult::Status::infeasible: return "infeasible";
    case MultiResult::Status::not_found: return "notfound";
  }
  return "?";
}

inline std::string fixed4(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

}  // namespace detail

/// Sweeps every target in [s_min, s_max]: oracle feasibility from one bulk
/// scan, the chain and retry solvers per target, and the threshold-based
/// success estimate from the attempt thresholds observed at s_min. Rows are pure
/// per-target computations, so they may be split across jobs; the merge is
/// an ordered write into the preallocated row vector.
inline CoverageReport run_coverage(std::span<const Nat> weights, Nat s_min, Nat s_max,
                                   unsigned jobs = 1,
                                   std::uint64_t ceiling = kDefaultOracleCeiling) {
  detail::check_sorted_weights(weights);
  if (s_min > s_max) throw std::invalid_argument("run_coverage: s_min > s_max");

  CoverageReport report;
  report.weights.assign(weights.begin(), weights.end());
  report.s_min = s_min;
  report.s_max = s_max;

  std::vector<bool> feasible = representable_set(s_max, weights, ceiling);
  const std::uint64_t lo = s_min.to_u64();
  const std::uint64_t hi = s_max.to_u64();
  report.rows.resize(static_cast<std::size_t>(hi - lo + 1));

  auto fill_row = [&](std::uint64_t s_val) {
    Nat s(s_val);
    CoverageReport::Row row;
    row.s = s;
    row.oracle_feasible = feasible[s_val];
    row.alg3 = solve_chain(s, weights).status;
    row.alg4 = solve_multi(s, weights).status;
    bool alg3_ok = row.alg3 == ChainResult::Status::solved  ? row.oracle_feasible
                   : row.alg3 == ChainResult::Status::infeasible ? !row.oracle_feasible
                                                                 : true;
    bool alg4_ok = row.alg4 == MultiResult::Status::solved  ? row.oracle_feasible
                   : row.alg4 == MultiResult::Status::infeasible ? !row.oracle_feasible
                                                                 : true;
    row.agree = alg3_ok && alg4_ok;
    report.rows[static_cast<std::size_t>(s_val - lo)] = row;
  };

  if (jobs <= 1) {
    for (std::uint64_t v = lo; v <= hi; ++v) fill_row(v);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) {
      pool.emplace_back([&, t]() {
        for (std::uint64_t v = lo + t; v <= hi; v += jobs) fill_row(v);
      });
    }
    for (auto& th : pool) th.join();
  }

  for (const auto& row : report.rows) {
    report.oracle_count += row.oracle_feasible ? 1 : 0;
    report.alg3_count += row.alg3 == ChainResult::Status::solved ? 1 : 0;
    report.alg4_count += row.alg4 == MultiResult::Status::solved ? 1 : 0;
  }

  // Attempt thresholds at the range start; single-divisor attempts carry
  // z = 0 and sit outside the probability model, so they are dropped.
  std::vector<Nat> zs;
  for (Nat z : solve_multi(s_min, weights).log.thresholds()) {
    if (!z.is_zero()) zs.push_back(z);
  }
  if (!zs.empty()) report.estimate = estimate_success(zs);
  return report;
}

/// CSV: header row, one row per target, aggregates as '#'-comment footer.
inline void write_coverage_csv(const CoverageReport& report, std::ostream& os) {
  os << "s,oracle_feasible,alg3,alg4,agree\n";
  for (const auto& row : report.rows) {
    os << row.s << ',' << (row.oracle_feasible ? 1 : 0) << ',' << detail::alg3_name(row.alg3)
       << ',' << detail::alg4_name(row.alg4) << ',' << (row.agree ? 1 : 0) << '\n';
  }
  os << "# weights";
  for (Nat w : report.weights) os << ' ' << w;
  os << '\n';
  os << "# s_range," << report.s_min << ',' << report.s_max << '\n';
  os << "# oracle_representable," << report.oracle_count << ',' << report.total() << ','
     << detail::fixed4(report.oracle_rate()) << '\n';
  os << "# alg3_success," << report.alg3_count << ',' << report.total() << ','
     << detail::fixed4(report.alg3_rate()) << '\n';
  os << "# alg4_success," << report.alg4_count << ',' << report.total() << ','
     << detail::fixed4(report.alg4_rate()) << '\n';
  if (report.estimate) {
    os << "# estimated_p_success," << report.estimate->p_success.str2() << ",clamped="
       << (report.estimate->clamped ? 1 : 0) << ",z=";
    for (std::size_t i = 0; i < report.estimate->z_values.size(); ++i) {
      if (i) os << ' ';
      os << report.estimate->z_values[i];
    }
    os << '\n';
  } else {
    os << "# estimated_p_success,none\n";
  }
}

/// The bundled W = {11,13,15,19,21} study: the sweep over [11, 119] plus the
/// quoted-ratio estimate (the four denominators 238, 334, 418, 718, i.e.
/// thresholds 119, 167, 209, 359) kept separate from the thresholds our own
/// attempt sequence finds.
struct Example1Report {
  CoverageReport coverage;
  ProbabilityEstimate quoted_estimate;  // from the quoted ratio list
  double claimed_rate = 0.85;           // quoted headline success rate
};

inline Example1Report run_example1(unsigned jobs = 1) {
  const std::vector<Nat> weights = {11u, 13u, 15u, 19u, 21u};
  const std::vector<Nat> quoted_z = {119u, 167u, 209u, 359u};
  Example1Report report;
  report.coverage = run_coverage(weights, 11u, 119u, jobs);
  report.quoted_estimate = estimate_success(quoted_z);
  return report;
}

inline std::string format_example1_summary(const Example1Report& report) {
  const CoverageReport& c = report.coverage;
  std::string out;
  out += "example1: W={11,13,15,19,21}, s in [11,119]\n";
  out += "  measured alg4 success rate : " + detail::fixed4(c.alg4_rate()) + " (" +
         std::to_string(c.alg4_count) + "/" + std::to_string(c.total()) + ")\n";
  out += "  measured alg3 success rate : " + detail::fixed4(c.alg3_rate()) + " (" +
         std::to_string(c.alg3_count) + "/" + std::to_string(c.total()) + ")\n";
  out += "  oracle representable rate  : " + detail::fixed4(c.oracle_rate()) + " (" +
         std::to_string(c.oracle_count) + "/" + std::to_string(c.total()) + ")\n";
  out += "  claimed success rate       : " + detail::fixed4(report.claimed_rate) + "\n";
  out += "  quoted-ratio estimate      : " + report.quoted_estimate.p_success.str2() +
         " (z = 119 167 209 359)\n";
  if (c.estimate) {
    out += "  own-attempt estimate       : " + c.estimate->p_success.str2() + " (z =";
    for (Nat z : c.estimate->z_values) out += " " + z.str();
    out += ")\n";
  } else {
    out += "  own-attempt estimate       : none (single-divisor subset at s_min)\n";
  }
  return out;
}

}  // namespace ussp
