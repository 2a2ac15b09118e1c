// Copyright 2026 The OMFLP Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "fuzz.hpp"
#include "omflp/baselines.hpp"
#include "omflp/bench.hpp"
#include "omflp/bounds.hpp"
#include "omflp/generators.hpp"
#include "omflp/instance.hpp"
#include "omflp/oracle.hpp"
#include "omflp/ordered_cover.hpp"
#include "omflp/primal_dual.hpp"
#include "omflp/random.hpp"
#include "omflp/randomized.hpp"
#include "omflp/solution.hpp"

using namespace omflp;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(double v) { return format_number(v); }

constexpr std::uint64_t kFuzzCount = 200;

Outcome constraint_maintenance() {
  const auto start = Clock::now();
  pd::PdOptions options;
  options.audit = true;
  double worst = kInfinity;
  std::size_t events = 0;
  for (std::uint64_t seed = 0; seed < kFuzzCount; ++seed) {
    const Instance inst = testing::fuzz_instance(seed);
    const pd::PdResult res = pd::run_pd(inst, options);
    for (const pd::TraceRecord& rec : res.state.trace) {
      worst = std::min(worst, rec.min_slack);
      ++events;
    }
  }
  const double elapsed = seconds_since(start);
  Outcome out;
  out.pass = worst >= -1e-9 && elapsed < 60.0;
  out.detail = std::to_string(events) + " events, min slack " + fmt(worst) + ", " +
               fmt(std::round(elapsed * 100) / 100) + " s";
  return out;
}

Outcome dual_sum_bound() {
  Outcome out;
  double worst = -kInfinity;
  for (std::uint64_t seed = 0; seed < kFuzzCount; ++seed) {
    const Instance inst = testing::fuzz_instance(seed);
    const pd::PdResult res = pd::run_pd(inst);
    const double cost = evaluate_cost(inst, res.solution).total;
    const double excess = cost - 3.0 * res.state.total_dual;
    worst = std::max(worst, excess);
    if (excess > 1e-9) out.pass = false;
  }
  out.detail = "max cost - 3*sum(a) = " + fmt(worst);
  return out;
}

Outcome dual_feasibility() {
  Outcome out;
  std::size_t violations = 0;
  for (std::uint64_t seed = 0; seed < kFuzzCount; ++seed) {
    const Instance inst = testing::fuzz_instance(seed);
    const pd::PdResult res = pd::run_pd(inst);
    const DualCertificate cert{res.state.a,
                               gamma(inst.num_commodities, inst.num_requests())};
    violations += check_dual_feasibility(inst, cert).size();
  }
  out.pass = violations == 0;
  out.detail = std::to_string(violations) + " violations";
  return out;
}

Outcome ratio_chain() {
  Outcome out;
  double worst = 0.0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Instance inst = testing::exact_fuzz_instance(seed);
    const double opt = solve_opt_bruteforce(inst).cost;
    const double cost = evaluate_cost(inst, pd::run_pd(inst).solution).total;
    const double ceiling = pd_ratio_ceiling(inst.num_commodities, inst.num_requests());
    if (cost > ceiling * opt + 1e-6) out.pass = false;
    if (opt > 0.0) worst = std::max(worst, cost / opt / ceiling);
  }
  out.detail = "max ratio / ceiling = " + fmt(worst);
  return out;
}

Outcome covering_bound() {
  const auto start = Clock::now();
  Outcome out;
  Rng rng(7);
  double worst = 0.0;
  for (int t = 0; t < 10000; ++t) {
    const auto n = static_cast<std::size_t>(rng.between(1, 50));
    const double c = rng.uniform(1.0, 100.0);
    const COrderedInstance inst = random_cordered(rng, n, c);
    if (!validate_cordered(inst).empty()) {
      out.pass = false;
      continue;
    }
    const CoverResult res = greedy_cover(inst);
    std::vector<int> hits(n + 1, 0);
    for (const CoverSet& s : res.sets) {
      for (std::size_t e : s.elements) {
        if (e >= 1 && e <= n) ++hits[e];
      }
    }
    for (std::size_t e = 1; e <= n; ++e) {
      if (hits[e] != 1) out.pass = false;
    }
    const double bound = weight_bound(c, n);
    if (res.total_weight > bound + 1e-9) out.pass = false;
    worst = std::max(worst, res.total_weight / bound);
  }
  const double elapsed = seconds_since(start);
  if (elapsed >= 30.0) out.pass = false;
  out.detail = "max weight / bound = " + fmt(worst) + ", " +
               fmt(std::round(elapsed * 100) / 100) + " s";
  return out;
}

Outcome lower_bound_reproduction() {
  const auto start = Clock::now();
  Outcome out;
  std::ostringstream detail;
  for (int k : {4, 16}) {
    const double opt = solve_opt_bruteforce(gen_thm1(k, 0), {1, 16, 4}).cost;
    if (opt != 1.0) out.pass = false;
    detail << "OPT(" << k << ")=" << fmt(opt) << " ";
  }
  for (int k : {4, 16, 64}) {
    const Instance inst = gen_thm1(k, 0);
    const double cost = evaluate_cost(inst, run_no_prediction(inst)).total;
    if (cost != std::sqrt(static_cast<double>(k))) out.pass = false;
    detail << "noPred(" << k << ")=" << fmt(cost) << " ";
  }
  // OPT is 1 on every instance of the family, so the ratio is the cost.
  constexpr int kSeeds = 500;
  double prev_mean = -kInfinity;
  double prev_se = 0.0;
  for (int k : {4, 16, 64}) {
    double sum = 0.0;
    double sq = 0.0;
    for (int s = 0; s < kSeeds; ++s) {
      const Instance inst = gen_thm1(k, static_cast<std::uint64_t>(s));
      const Solution sol = rnd::run_rand(inst, static_cast<std::uint64_t>(s)).solution;
      const double cost = evaluate_cost(inst, sol).total;
      sum += cost;
      sq += cost * cost;
    }
    const double mean = sum / kSeeds;
    const double var = std::max(0.0, (sq - sum * mean) / (kSeeds - 1));
    const double se = std::sqrt(var / kSeeds);
    if (std::isfinite(prev_mean) &&
        mean - prev_mean < 3.0 * std::sqrt(se * se + prev_se * prev_se)) {
      out.pass = false;
    }
    if (k == 64 && mean - 3.0 * se <= std::sqrt(64.0) / 16.0) out.pass = false;
    detail << "rand(" << k << ")=" << fmt(std::round(mean * 1000) / 1000) << "±"
           << fmt(std::round(se * 1000) / 1000) << " ";
    prev_mean = mean;
    prev_se = se;
  }
  const double elapsed = seconds_since(start);
  if (elapsed >= 120.0) out.pass = false;
  detail << fmt(std::round(elapsed * 100) / 100) << " s";
  out.detail = detail.str();
  return out;
}

Outcome rand_accounting() {
  Outcome out;
  std::size_t infeasible = 0;
  double worst = 0.0;
  for (std::uint64_t i = 0; i < 1000; ++i) {
    const Instance inst = testing::fuzz_instance(10000 + i);
    const rnd::RandResult res = rnd::run_rand(inst, i * 7919 + 1);
    if (!check_feasible(inst, res.solution).ok()) ++infeasible;
    worst = std::max(worst, res.stats.telescoping_error);
  }
  out.pass = infeasible == 0 && worst <= 1e-9;
  out.detail = std::to_string(infeasible) + " infeasible, max telescoping error " + fmt(worst);
  return out;
}

Outcome adaptive_trend() {
  Outcome out;
  const double expected[] = {8.0, 2.0 * std::sqrt(2.0), 1.0};
  std::ostringstream detail;
  for (int x = 0; x <= 2; ++x) {
    const Instance inst = gen_gx(64, x, 0);
    const RatioStats r = estimate_ratio(inst, Algorithm::kNoPrediction, 1, 0);
    const double tol = x == 1 ? 0.01 : 1e-12;
    if (r.opt_is_exact || std::abs(r.mean - expected[x]) > tol) out.pass = false;
    detail << "x=" << x << ": " << fmt(r.mean) << " ";
  }
  out.detail = detail.str();
  return out;
}

Outcome oracle_cross_check() {
  Outcome out;
  std::size_t mismatches = 0;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Instance inst = gen_random(RandomParams::oracle_preset(), 500 + seed);
    const double a = solve_opt_bruteforce(inst, {}, EnumerationOrder::kDepthFirst).cost;
    const double b = solve_opt_bruteforce(inst, {}, EnumerationOrder::kReverseCounter).cost;
    if (a != b) ++mismatches;
  }
  out.pass = mismatches == 0;
  out.detail = std::to_string(mismatches) + " mismatches";
  return out;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// gen -> run -> bench through the CLI binary, in a fresh directory.
std::string cli_pipeline(const std::filesystem::path& dir, int threads) {
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  const std::string cli = OMFLP_CLI_PATH;
  const std::string d = dir.string();
  const std::string env = "OMFLP_THREADS=" + std::to_string(threads) + " ";
  const std::string cmds[] = {
      cli + " gen random --seed 11 --points 4 --commodities 3 --requests 8 -o " + d +
          "/inst.json",
      cli + " gen thm1 --S 16 --seed 4 -o " + d + "/thm1.json",
      env + cli + " run " + d + "/inst.json --algorithm rand --seed 5 --trace " + d +
          "/rand_trace.json > " + d + "/rand.json",
      env + cli + " run " + d + "/inst.json --algorithm pd --trace " + d +
          "/pd_trace.json > " + d + "/pd.json",
      env + cli + " bench --config " + d + "/config.json -o " + d + "/bench.csv",
  };
  {
    std::ofstream cfg(dir / "config.json");
    cfg << R"({"instances": [{"id": "inst", "file": "inst.json"},
                 {"id": "thm1", "file": "thm1.json"},
                 {"id": "gx", "gen": "gx", "S": 16, "x": 1}],
  "algorithms": ["pd", "rand", "per-commodity", "no-prediction"],
  "trials": 12, "base_seed": 3})";
  }
  for (const std::string& cmd : cmds) {
    if (std::system(cmd.c_str()) != 0) return "command failed: " + cmd;
  }
  std::string all;
  for (const char* f : {"inst.json", "thm1.json", "rand.json", "rand_trace.json", "pd.json",
                        "pd_trace.json", "bench.csv"}) {
    all += std::string(f) + "\n" + slurp(dir / f);
  }
  return all;
}

Outcome determinism() {
  Outcome out;
  // In process.
  const char* config = R"({
    "instances": [{"id": "r", "gen": "random", "seed": 9, "points": 4,
                   "commodities": 3, "requests": 8},
                  {"id": "t", "gen": "thm1", "S": 16, "seed": 1}],
    "algorithms": ["pd", "rand", "per-commodity", "no-prediction"],
    "trials": 16, "base_seed": 0})";
  std::vector<std::string> runs;
  for (int rep = 0; rep < 2; ++rep) {
    for (std::size_t threads : {1u, 4u}) {
      const Instance inst = gen_random(RandomParams{}, 9);
      std::string s = serialize_instance(inst);
      s += serialize_solution(inst, rnd::run_rand(inst, 3).solution);
      s += serialize_solution(inst, pd::run_pd(inst).solution);
      s += run_experiment(config, ".", threads).csv;
      runs.push_back(std::move(s));
    }
  }
  for (const std::string& s : runs) {
    if (s != runs[0]) out.pass = false;
  }
  // Separate processes.
  const std::filesystem::path base = OMFLP_WORK_DIR;
  const std::string a = cli_pipeline(base / "t1", 1);
  const std::string b = cli_pipeline(base / "t4", 4);
  const std::string c = cli_pipeline(base / "t1b", 1);
  const bool cli_ok = a.rfind("command failed", 0) != 0 && a == b && a == c;
  if (!cli_ok) out.pass = false;
  out.detail = std::string("in-process ") + (runs[0] == runs[1] && runs[0] == runs[3] ? "same" : "differs") +
               ", cli " + (cli_ok ? "same" : (a.rfind("command failed", 0) == 0 ? a : "differs")) +
               " (" + std::to_string(a.size()) + " bytes)";
  return out;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"constraint maintenance", constraint_maintenance},
      {"cost within three times the dual sum", dual_sum_bound},
      {"scaled dual feasibility", dual_feasibility},
      {"ratio within the explicit constant chain", ratio_chain},
      {"c-ordered covering bound", covering_bound},
      {"lower-bound family reproduction", lower_bound_reproduction},
      {"randomized feasibility and accounting", rand_accounting},
      {"adaptive lower-bound trend", adaptive_trend},
      {"oracle cross-check", oracle_cross_check},
      {"determinism", determinism},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome out;
    try {
      out = criteria[i].second();
    } catch (const std::exception& e) {
      out.pass = false;
      out.detail = std::string("exception: ") + e.what();
    }
    if (!out.pass) ++failures;
    std::printf("%s %2zu %s: %s\n", out.pass ? "PASS" : "FAIL", i + 1, criteria[i].first,
                out.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
