// Command-line surface for the USSP toolkit: solving single instances,
// seeded instance generation, s-range coverage experiments, the bundled
// example study, pairwise Frobenius numbers and a scaling benchmark.
//
// Exit codes: 0 solved / report written, 1 infeasible, 2 not found,
// 3 usage or parse error, 4 overflow or oracle ceiling.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ussp/ussp.hpp"

namespace {

constexpr int kExitSolved = 0;
constexpr int kExitInfeasible = 1;
constexpr int kExitNotFound = 2;
constexpr int kExitUsage = 3;
constexpr int kExitOverflow = 4;

std::vector<ussp::Nat> parse_weight_list(const std::string& text) {
  std::vector<ussp::Nat> weights;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    auto value = ussp::Nat::parse(token);
    if (!value) throw ussp::ValidationError("bad weight '" + token + "' in list");
    weights.push_back(*value);
  }
  if (weights.empty()) throw ussp::ValidationError("empty weight list");
  return weights;
}

int cmd_solve(const std::string& path, const std::string& method_text, bool spread) {
  auto method = ussp::parse_method(method_text);
  if (!method) {
    std::cerr << "unknown method '" << method_text << "'\n";
    return kExitUsage;
  }
  std::ifstream file(path);
  if (!file) {
    std::cerr << "cannot open instance file '" << path << "'\n";
    return kExitUsage;
  }
  ussp::Instance inst = ussp::parse_instance(file);
  ussp::DispatchResult result = ussp::run_solve(inst, *method, spread);
  switch (result.status) {
    case ussp::DispatchResult::Status::solved: {
      std::cout << "SOLVED " << ussp::method_name(result.solution->method_tag) << '\n';
      for (std::size_t i = 0; i < result.solution->coefficients.size(); ++i) {
        if (i) std::cout << ' ';
        std::cout << result.solution->coefficients[i];
      }
      std::cout << '\n';
      return kExitSolved;
    }
    case ussp::DispatchResult::Status::infeasible:
      std::cout << "INFEASIBLE " << result.certificate << '\n';
      return kExitInfeasible;
    case ussp::DispatchResult::Status::not_found:
      std::cout << "NOTFOUND\n";
      return kExitNotFound;
  }
  return kExitUsage;
}

int cmd_coverage(const std::string& weights_text, std::uint64_t s_min, std::uint64_t s_max,
                 const std::string& out_path, unsigned jobs) {
  auto weights = parse_weight_list(weights_text);
  ussp::CoverageReport report = ussp::run_coverage(weights, s_min, s_max, jobs);
  std::ofstream out(out_path);
  if (!out) {
    std::cerr << "cannot open output file '" << out_path << "'\n";
    return kExitUsage;
  }
  ussp::write_coverage_csv(report, out);
  std::cout << "coverage written to " << out_path << " (" << report.total() << " rows)\n";
  return kExitSolved;
}

int cmd_gen(std::uint64_t n, const std::string& max_weight_text, const std::string& strategy_text,
            std::uint64_t seed) {
  auto max_weight = ussp::Nat::parse(max_weight_text);
  if (!max_weight) {
    std::cerr << "bad max-weight '" << max_weight_text << "'\n";
    return kExitUsage;
  }
  auto strategy = ussp::SStrategy::parse(strategy_text);
  if (!strategy) {
    std::cerr << "bad strategy '" << strategy_text
              << "' (want above-threshold | below-threshold | uniform:LO:HI)\n";
    return kExitUsage;
  }
  ussp::Instance inst =
      ussp::generate_instance(static_cast<std::size_t>(n), *max_weight, *strategy, seed);
  std::cout << ussp::format_instance(inst);
  return kExitSolved;
}

int cmd_frobenius(const std::string& weights_text) {
  auto weights = parse_weight_list(weights_text);
  if (weights.size() != 2) {
    std::cerr << "frobenius expects exactly two weights\n";
    return kExitUsage;
  }
  std::cout << ussp::frobenius_two(weights[0], weights[1]) << '\n';
  return kExitSolved;
}

int cmd_example1(const std::string& out_path, unsigned jobs) {
  ussp::Example1Report report = ussp::run_example1(jobs);
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "cannot open output file '" << out_path << "'\n";
      return kExitUsage;
    }
    ussp::write_coverage_csv(report.coverage, out);
    std::cout << ussp::format_example1_summary(report);
  } else {
    ussp::write_coverage_csv(report.coverage, std::cout);
    std::cerr << ussp::format_example1_summary(report);
  }
  return kExitSolved;
}

// Wall-clock scaling of the chain solver across instance sizes with weights
// up to 2^60; informational only.
int cmd_bench(std::uint64_t seed, std::uint64_t cases) {
  using clock = std::chrono::steady_clock;
  const ussp::Nat max_weight = ussp::Nat::from_u128(ussp::uint128{1} << 60);
  std::cout << "n,cases,total_ms,per_case_us\n";
  for (std::size_t n : {100u, 1000u, 10000u, 100000u}) {
    std::vector<ussp::Instance> instances;
    instances.reserve(cases);
    for (std::uint64_t c = 0; c < cases; ++c) {
      instances.push_back(ussp::generate_instance(n, max_weight,
                                                  ussp::SStrategy::above_threshold(),
                                                  seed + c * 1000003 + n));
    }
    auto start = clock::now();
    for (const auto& inst : instances) {
      ussp::ChainResult r = ussp::solve_chain(inst.target_s, inst.weights);
      if (!r.solved()) {
        std::cerr << "bench: chain failed on n=" << n << " s=" << inst.target_s << '\n';
      }
    }
    auto stop = clock::now();
    double total_ms = std::chrono::duration<double, std::milli>(stop - start).count();
    char line[128];
    std::snprintf(line, sizeof line, "%zu,%llu,%.3f,%.3f\n", n,
                  static_cast<unsigned long long>(cases), total_ms,
                  cases ? total_ms * 1000.0 / double(cases) : 0.0);
    std::cout << line;
  }
  return kExitSolved;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Unbounded subset-sum solver toolkit"};
  app.require_subcommand(1);

  std::string instance_path;
  std::string method_text = "auto";
  bool spread = false;
  auto* solve = app.add_subcommand("solve", "solve one instance file");
  solve->add_option("--instance", instance_path, "instance file")->required();
  solve->add_option("--method", method_text, "auto|chain|multi|dp");
  solve->add_flag("--spread", spread, "spread the residual over all weights (chain)");

  std::string cov_weights;
  std::uint64_t cov_min = 0;
  std::uint64_t cov_max = 0;
  std::string cov_out;
  unsigned cov_jobs = 1;
  auto* coverage = app.add_subcommand("coverage", "sweep an s-range against the oracle");
  coverage->add_option("--weights", cov_weights, "comma-separated weights")->required();
  coverage->add_option("--s-min", cov_min, "range start")->required();
  coverage->add_option("--s-max", cov_max, "range end")->required();
  coverage->add_option("--out", cov_out, "CSV output file")->required();
  coverage->add_option("--jobs", cov_jobs, "parallel workers");

  std::uint64_t gen_n = 0;
  std::string gen_max;
  std::string gen_strategy;
  std::uint64_t gen_seed = 0;
  auto* gen = app.add_subcommand("gen", "generate a seeded random instance");
  gen->add_option("--n", gen_n, "number of weights")->required();
  gen->add_option("--max-weight", gen_max, "weights drawn from [2, max]")->required();
  gen->add_option("--strategy", gen_strategy, "above-threshold|below-threshold|uniform:LO:HI")
      ->required();
  gen->add_option("--seed", gen_seed, "RNG seed (mandatory: runs must reproduce)")->required();

  std::string frob_weights;
  auto* frobenius = app.add_subcommand("frobenius", "pairwise Frobenius number");
  frobenius->add_option("--weights", frob_weights, "P1,P2")->required();

  std::string ex1_out;
  unsigned ex1_jobs = 1;
  auto* example1 = app.add_subcommand("example1", "run the bundled coverage study");
  example1->add_option("--out", ex1_out, "CSV output file (default: stdout)");
  example1->add_option("--jobs", ex1_jobs, "parallel workers");

  std::uint64_t bench_seed = 0;
  std::uint64_t bench_cases = 0;
  auto* bench = app.add_subcommand("bench", "chain-solver scaling benchmark");
  bench->add_option("--seed", bench_seed, "RNG seed (mandatory)")->required();
  bench->add_option("--cases", bench_cases, "instances per size")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*solve) return cmd_solve(instance_path, method_text, spread);
    if (*coverage) return cmd_coverage(cov_weights, cov_min, cov_max, cov_out, cov_jobs);
    if (*gen) return cmd_gen(gen_n, gen_max, gen_strategy, gen_seed);
    if (*frobenius) return cmd_frobenius(frob_weights);
    if (*example1) return cmd_example1(ex1_out, ex1_jobs);
    if (*bench) return cmd_bench(bench_seed, bench_cases);
  } catch (const ussp::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ussp::ValidationError& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ussp::NotCoprimeError& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ussp::OverflowError& e) {
    std::cerr << "overflow: " << e.what() << '\n';
    return kExitOverflow;
  } catch (const ussp::CeilingExceededError& e) {
    std::cerr << "ceiling: " << e.what() << '\n';
    return kExitOverflow;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
