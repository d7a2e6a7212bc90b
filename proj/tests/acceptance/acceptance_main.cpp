// Acceptance suite: runs every toolkit-level criterion at its stated
// tolerance and prints one PASS/FAIL line per criterion. Measured-only
// figures (success rates the hard assertions leave open) are printed as
// report lines. Exit code is the number of failed criteria.

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <mutex>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "../support/brute.hpp"
#include "ussp/ussp.hpp"

namespace {

using ussp::Nat;

struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<std::string> report_lines;
  double seconds = 0;
};

double elapsed_s(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> coprime_pairs(std::uint64_t max) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;
  for (std::uint64_t p1 = 2; p1 <= max; ++p1) {
    for (std::uint64_t p2 = p1 + 1; p2 <= max; ++p2) {
      if (std::gcd(p1, p2) == 1) pairs.emplace_back(p1, p2);
    }
  }
  return pairs;
}

// ---- criterion 1: pair Frobenius formula vs the oracle --------------------

Outcome criterion1() {
  auto start = std::chrono::steady_clock::now();
  Outcome out;

  if (ussp::frobenius_two(11u, 13u) != Nat(119u)) {
    out.pass = false;
    out.detail = "frobenius_two(11,13) != 119";
    return out;
  }
  std::uint64_t checked = 0;
  for (auto [p1, p2] : coprime_pairs(30)) {
    Nat f = ussp::frobenius_two(p1, p2);
    std::vector<Nat> w = {Nat(p1), Nat(p2)};
    auto bits = ussp::representable_set(f + Nat(64u), w);
    std::uint64_t largest_unset = 0;
    for (std::uint64_t v = 0; v < bits.size(); ++v) {
      if (!bits[v]) largest_unset = v;
    }
    if (Nat(largest_unset) != f) {
      out.pass = false;
      out.detail = "oracle gap mismatch at (" + std::to_string(p1) + "," + std::to_string(p2) + ")";
      return out;
    }
    ++checked;
  }
  out.seconds = elapsed_s(start);
  if (out.seconds >= 10.0) {
    out.pass = false;
    out.detail = "runtime bound 10 s exceeded";
    return out;
  }
  out.detail = "frobenius_two(11,13)=119; oracle gap matches formula on " +
               std::to_string(checked) + " coprime pairs";
  return out;
}

// ---- criterion 2: Sylvester exact half ------------------------------------

Outcome criterion2() {
  auto start = std::chrono::steady_clock::now();
  Outcome out;
  std::uint64_t checked = 0;
  for (auto [p1, p2] : coprime_pairs(30)) {
    Nat f = ussp::frobenius_two(p1, p2);
    std::vector<Nat> w = {Nat(p1), Nat(p2)};
    if (ussp::count_representable_exact(f, w) != (f + Nat(1u)) / Nat(2u)) {
      out.pass = false;
      out.detail = "half count failed at (" + std::to_string(p1) + "," + std::to_string(p2) + ")";
      return out;
    }
    ++checked;
  }
  out.seconds = elapsed_s(start);
  if (out.seconds >= 10.0) {
    out.pass = false;
    out.detail = "runtime bound 10 s exceeded";
    return out;
  }
  out.detail = "exactly (z+1)/2 representable on " + std::to_string(checked) + " pairs";
  return out;
}

// ---- criterion 3: two-term completeness above the Frobenius number --------

Outcome criterion3() {
  auto start = std::chrono::steady_clock::now();
  Outcome out;
  std::uint64_t witnesses = 0;
  for (auto [p1, p2] : coprime_pairs(30)) {
    std::uint64_t f = p1 * p2 - p1 - p2;
    for (std::uint64_t s = f + 1; s <= f + 500; ++s) {
      auto r = ussp::solve_two(s, p1, p2);
      if (!r.solved() ||
          r.witness->y1_star * Nat(p1) + r.witness->y2_star * Nat(p2) != Nat(s)) {
        out.pass = false;
        out.detail = "no verified witness at s=" + std::to_string(s) + " (" +
                     std::to_string(p1) + "," + std::to_string(p2) + ")";
        return out;
      }
      ++witnesses;
    }
  }
  out.seconds = elapsed_s(start);
  if (out.seconds >= 30.0) {
    out.pass = false;
    out.detail = "runtime bound 30 s exceeded";
    return out;
  }
  out.detail = std::to_string(witnesses) + " verified witnesses, zero too-small outcomes";
  return out;
}

// ---- criterion 4: coset count equals enumeration ---------------------------

Outcome criterion4() {
  auto start = std::chrono::steady_clock::now();
  Outcome out;
  std::uint64_t checked = 0;
  for (auto [p1, p2] : coprime_pairs(20)) {
    for (std::uint64_t s = 0; s <= 400; ++s) {
      if (ussp::count_two(s, p1, p2).to_u64() != brute::count_pairs(s, p1, p2)) {
        out.pass = false;
        out.detail = "count mismatch at s=" + std::to_string(s) + " (" + std::to_string(p1) +
                     "," + std::to_string(p2) + ")";
        return out;
      }
      ++checked;
    }
  }
  out.seconds = elapsed_s(start);
  if (out.seconds >= 30.0) {
    out.pass = false;
    out.detail = "runtime bound 30 s exceeded";
    return out;
  }
  out.detail = std::to_string(checked) + " counts equal brute-force enumeration";
  return out;
}

// ---- criteria 5/6: the exhaustive oracle/pipeline grid ---------------------

std::vector<std::vector<Nat>> grid_weight_sets() {
  std::vector<std::vector<Nat>> sets;
  for (std::uint64_t a = 1; a <= 25; ++a) {
    sets.push_back({Nat(a)});
    for (std::uint64_t b = a + 1; b <= 25; ++b) {
      sets.push_back({Nat(a), Nat(b)});
      for (std::uint64_t c = b + 1; c <= 25; ++c) {
        sets.push_back({Nat(a), Nat(b), Nat(c)});
        for (std::uint64_t d = c + 1; d <= 25; ++d) {
          sets.push_back({Nat(a), Nat(b), Nat(c), Nat(d)});
        }
      }
    }
  }
  return sets;
}

template <typename PerSet>
void parallel_over_sets(const std::vector<std::vector<Nat>>& sets, PerSet per_set) {
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < jobs; ++t) {
    pool.emplace_back([&]() {
      for (;;) {
        std::size_t i = next.fetch_add(1);
        if (i >= sets.size()) break;
        per_set(sets[i]);
      }
    });
  }
  for (auto& th : pool) th.join();
}

Outcome criterion5() {
  auto start = std::chrono::steady_clock::now();
  Outcome out;
  auto sets = grid_weight_sets();
  std::atomic<std::uint64_t> disagreements{0};
  std::atomic<std::uint64_t> checked{0};
  std::mutex detail_mutex;
  std::string first_detail;

  parallel_over_sets(sets, [&](const std::vector<Nat>& weights) {
    auto bits = ussp::representable_set(1500u, weights);
    auto table = ussp::build_residue_table(weights);
    for (std::uint64_t s = 0; s <= 1500; ++s) {
      bool sieve = bits[s];
      bool residue = ussp::residue_decide(table, s);
      bool dp = ussp::dp_solve(s, weights).feasible();
      checked.fetch_add(1, std::memory_order_relaxed);
      if (sieve != residue || sieve != dp) {
        if (disagreements.fetch_add(1) == 0) {
          std::lock_guard<std::mutex> lock(detail_mutex);
          first_detail = "first disagreement at s=" + std::to_string(s);
        }
      }
    }
  });

  out.seconds = elapsed_s(start);
  if (disagreements.load() != 0) {
    out.pass = false;
    out.detail = std::to_string(disagreements.load()) + " disagreements; " + first_detail;
    return out;
  }
  out.detail = "dp/residue/bitset verdicts identical on " + std::to_string(checked.load()) +
               " (s, W) points across " + std::to_string(sets.size()) + " weight sets";
  return out;
}

Outcome criterion6() {
  auto start = std::chrono::steady_clock::now();
  Outcome out;
  auto sets = grid_weight_sets();
  std::atomic<std::uint64_t> false_positives{0};
  std::atomic<std::uint64_t> missed_feasibles{0};
  std::atomic<std::uint64_t> bad_outcomes{0};
  std::atomic<std::uint64_t> checked{0};

  parallel_over_sets(sets, [&](const std::vector<Nat>& weights) {
    auto bits = ussp::representable_set(1500u, weights);
    ussp::Instance inst;
    inst.weights = weights;
    for (std::uint64_t s = 0; s <= 1500; ++s) {
      inst.target_s = Nat(s);
      auto r = ussp::run_solve(inst, ussp::SolveMethod::automatic);
      checked.fetch_add(1, std::memory_order_relaxed);
      if (r.solved()) {
        bool verified = ussp::solution_satisfies(inst.target_s, inst.weights,
                                                 r.solution->coefficients);
        if (!bits[s] || !verified) false_positives.fetch_add(1);
      } else if (r.infeasible()) {
        if (bits[s]) missed_feasibles.fetch_add(1);
      } else {
        bad_outcomes.fetch_add(1);  // auto must never leave not_found in-ceiling
      }
    }
  });

  out.seconds = elapsed_s(start);
  if (false_positives.load() || missed_feasibles.load() || bad_outcomes.load()) {
    out.pass = false;
    out.detail = std::to_string(false_positives.load()) + " false positives, " +
                 std::to_string(missed_feasibles.load()) + " missed feasibles, " +
                 std::to_string(bad_outcomes.load()) + " not-found leaks";
    return out;
  }
  out.detail = "auto pipeline matches the oracle verdict on " + std::to_string(checked.load()) +
               " (s, W) points";
  return out;
}

// ---- criterion 7: chain success above the threshold ------------------------

Outcome criterion7() {
  auto start = std::chrono::steady_clock::now();
  Outcome out;
  std::mt19937_64 rng(0x5eed2025u);
  auto draw = [&rng](std::uint64_t bound) { return bound ? rng() % bound : 0; };

  const std::uint64_t kCases = 10000;
  std::uint64_t solved = 0;
  std::uint64_t too_small = 0;
  std::uint64_t infeasible = 0;
  std::uint64_t verify_failures = 0;

  for (std::uint64_t c = 0; c < kCases; ++c) {
    std::vector<Nat> weights;
    std::uint64_t s = 0;
    std::uint64_t z = 0;
    for (;;) {
      std::set<std::uint64_t> pool;
      std::size_t n = 2 + draw(5);
      while (pool.size() < n) pool.insert(2 + draw(29));
      weights.assign(pool.begin(), pool.end());
      std::uint64_t g = 0;
      for (Nat w : weights) g = std::gcd(g, w.to_u64());

      auto generic = ussp::find_divisor_subset(Nat(g), weights);
      std::uint64_t z_ref = ussp::threshold_z(*generic).to_u64();
      bool found = false;
      for (int attempt = 0; attempt < 40 && !found; ++attempt) {
        std::uint64_t m = z_ref / g + 1 + draw(1000 / g + 1);
        std::uint64_t cand = m * g;
        auto own = ussp::find_divisor_subset(Nat(cand), weights);
        std::uint64_t own_z = ussp::threshold_z(*own).to_u64();
        if (cand > own_z && cand <= own_z + 1000) {
          s = cand;
          z = own_z;
          found = true;
        }
      }
      if (found) break;
    }

    auto r = ussp::solve_chain(Nat(s), weights);
    if (r.solved()) {
      ++solved;
      if (!ussp::solution_satisfies(Nat(s), weights, r.solution->coefficients)) {
        ++verify_failures;
      }
    } else if (r.too_small()) {
      ++too_small;
    } else {
      ++infeasible;
    }
    (void)z;
  }

  out.seconds = elapsed_s(start);
  if (verify_failures || infeasible || solved + too_small != kCases) {
    out.pass = false;
    out.detail = std::to_string(verify_failures) + " verification failures, " +
                 std::to_string(infeasible) + " spurious infeasibles";
    return out;
  }
  char rate[64];
  std::snprintf(rate, sizeof rate, "%.4f%%", 100.0 * double(too_small) / double(kCases));
  out.detail = "soundness 100% on " + std::to_string(kCases) + " above-threshold instances";
  out.report_lines.push_back(std::string("measured too-small rate ") + rate +
                             " vs claimed 0% (" + std::to_string(too_small) + "/" +
                             std::to_string(kCases) + ")");
  return out;
}

// ---- criterion 8: quoted-ratio estimate reproduction ------------------------

Outcome criterion8() {
  auto start = std::chrono::steady_clock::now();
  Outcome out;
  std::vector<Nat> quoted = {119u, 167u, 209u, 359u};
  auto est = ussp::estimate_success(quoted);
  double p = est.p_success.to_double();
  if (p < 0.8034 - 0.0005 || p > 0.8034 + 0.0005 || est.p_success.str2() != "0.80") {
    out.pass = false;
    out.detail = "quoted-ratio list gave " + est.p_success.str2();
    return out;
  }
  std::vector<Nat> single = {500u};
  if (ussp::estimate_success(single).p_success != ussp::Rational::of(1u, 2u)) {
    out.pass = false;
    out.detail = "single-subset case is not exactly 0.5";
    return out;
  }
  std::vector<Nat> twin = {100u, 100u};
  if (ussp::estimate_success(twin).p_success != ussp::Rational::of(3u, 4u)) {
    out.pass = false;
    out.detail = "two-equal-thresholds case is not exactly 0.75";
    return out;
  }
  out.seconds = elapsed_s(start);
  out.detail = "estimate 0.80344 -> \"0.80\"; single 0.5 exact; twin 0.75 exact";
  return out;
}

// ---- criterion 9: bundled example study -------------------------------------

Outcome criterion9() {
  auto start = std::chrono::steady_clock::now();
  Outcome out;
  auto report = ussp::run_example1();
  out.seconds = elapsed_s(start);
  if (out.seconds >= 5.0) {
    out.pass = false;
    out.detail = "runtime bound 5 s exceeded";
    return out;
  }
  const auto& c = report.coverage;
  if (c.alg4_rate() > c.oracle_rate()) {
    out.pass = false;
    out.detail = "alg4 rate exceeds the oracle rate (soundness breach)";
    return out;
  }
  for (const auto& row : c.rows) {
    if (!row.agree) {
      out.pass = false;
      out.detail = "solver verdict contradicts the oracle at s=" + row.s.str();
      return out;
    }
  }
  char buf[160];
  std::snprintf(buf, sizeof buf, "alg4 %.4f vs claimed 0.85 (|delta| = %.1f pp, window 10 pp: %s)",
                c.alg4_rate(), 100.0 * std::abs(c.alg4_rate() - 0.85),
                std::abs(c.alg4_rate() - 0.85) <= 0.10 ? "inside" : "outside");
  out.detail = "soundness holds; alg4 " + std::to_string(c.alg4_count) + "/" +
               std::to_string(c.total()) + " <= oracle " + std::to_string(c.oracle_count) + "/" +
               std::to_string(c.total());
  out.report_lines.push_back(buf);
  std::snprintf(buf, sizeof buf, "oracle representable %.4f; quoted estimate %s",
                c.oracle_rate(), report.quoted_estimate.p_success.str2().c_str());
  out.report_lines.push_back(buf);
  return out;
}

// ---- criterion 10: counting-formula audit -----------------------------------

Outcome criterion10() {
  auto start = std::chrono::steady_clock::now();
  Outcome out;
  const std::string path = "counting_formula_audit.csv";
  std::ofstream csv(path);
  csv << "p1,p2,s,formula,exact\n";
  std::uint64_t mismatches = 0;
  std::uint64_t rows = 0;
  for (auto [p1, p2] : coprime_pairs(15)) {
    Nat f = ussp::frobenius_two(p1, p2);
    std::vector<Nat> w = {Nat(p1), Nat(p2)};
    for (std::uint64_t s = 0; s <= f.to_u64(); ++s) {
      Nat formula = ussp::count_representable_formula(s, p1, p2);
      Nat exact = ussp::count_representable_exact(s, w);
      ++rows;
      if (formula != exact) {
        ++mismatches;
        csv << p1 << ',' << p2 << ',' << s << ',' << formula << ',' << exact << '\n';
      }
    }
  }
  csv.close();

  if (ussp::count_representable_formula(7u, 3u, 5u) != Nat(4u) ||
      ussp::count_representable_exact(7u, std::vector<Nat>{3u, 5u}) != Nat(4u)) {
    out.pass = false;
    out.detail = "(7,3,5) spot check failed";
    return out;
  }
  out.seconds = elapsed_s(start);
  out.detail = "audit complete: " + std::to_string(rows) + " comparisons, (7,3,5) agrees at 4";
  out.report_lines.push_back(std::to_string(mismatches) + "/" + std::to_string(rows) +
                             " formula-vs-exact discrepancies written to " + path);
  return out;
}

}  // namespace

int main() {
  struct Entry {
    int id;
    const char* title;
    Outcome (*run)();
  };
  const Entry entries[] = {
      {1, "pair Frobenius formula vs oracle", criterion1},
      {2, "Sylvester exact half", criterion2},
      {3, "two-term completeness above threshold", criterion3},
      {4, "coset count vs enumeration", criterion4},
      {5, "oracle self-agreement grid", criterion5},
      {6, "pipeline soundness + completeness grid", criterion6},
      {7, "chain above-threshold success", criterion7},
      {8, "quoted-ratio estimate reproduction", criterion8},
      {9, "bundled example coverage", criterion9},
      {10, "counting-formula audit", criterion10},
  };

  int failures = 0;
  for (const auto& entry : entries) {
    Outcome out;
    try {
      out = entry.run();
    } catch (const std::exception& e) {
      out.pass = false;
      out.detail = std::string("exception: ") + e.what();
    }
    if (!out.pass) ++failures;
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2fs", out.seconds);
    std::cout << (out.pass ? "[PASS]" : "[FAIL]") << " criterion " << entry.id << " (" << timing
              << "): " << entry.title << " -- " << out.detail << '\n';
    for (const auto& line : out.report_lines) {
      std::cout << "       report: " << line << '\n';
    }
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed")
            << '\n';
  return failures;
}
