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

#include "omflp/bench.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <thread>

#include "json.hpp"
#include "omflp/baselines.hpp"
#include "omflp/errors.hpp"
#include "omflp/generators.hpp"
#include "omflp/numeric.hpp"
#include "omflp/primal_dual.hpp"
#include "omflp/randomized.hpp"

namespace omflp {
namespace {

using nlohmann::json;

MetricKind parse_metric_kind(const std::string& s) {
  if (s == "line") return MetricKind::kLine;
  if (s == "matrix") return MetricKind::kMatrix;
  throw InvalidArgumentError("unknown metric kind '" + s + "'");
}

CostModel::Kind parse_cost_kind(const std::string& s) {
  if (s == "table") return CostModel::Kind::kTable;
  if (s == "size_based") return CostModel::Kind::kSizeBased;
  if (s == "poly") return CostModel::Kind::kPoly;
  throw InvalidArgumentError("unknown cost kind '" + s + "'");
}

Instance instance_from_entry(const json& entry, const std::filesystem::path& base_dir) {
  if (entry.contains("file")) {
    std::filesystem::path path = entry.at("file").get<std::string>();
    if (path.is_relative()) path = base_dir / path;
    return load_instance(path);
  }
  const std::string gen = entry.at("gen").get<std::string>();
  const auto seed = entry.value("seed", std::uint64_t{0});
  if (gen == "thm1") return gen_thm1(entry.at("S").get<int>(), seed);
  if (gen == "gx") return gen_gx(entry.at("S").get<int>(), entry.at("x").get<double>(), seed);
  if (gen == "random") {
    RandomParams p;
    p.num_points = entry.value("points", p.num_points);
    p.num_commodities = entry.value("commodities", p.num_commodities);
    p.num_requests = entry.value("requests", p.num_requests);
    p.metric = parse_metric_kind(entry.value("metric", std::string("line")));
    p.cost_kind = parse_cost_kind(entry.value("cost", std::string("table")));
    p.max_set_size = entry.value("max_set_size", p.max_set_size);
    return gen_random(p, seed);
  }
  throw InvalidArgumentError("unknown generator '" + gen + "'");
}

struct Job {
  std::size_t instance = 0;
  Algorithm algorithm = Algorithm::kPd;
  std::uint64_t seed = 0;
};

}  // namespace

Algorithm parse_algorithm(std::string_view name) {
  if (name == "pd") return Algorithm::kPd;
  if (name == "rand") return Algorithm::kRand;
  if (name == "per-commodity") return Algorithm::kPerCommodity;
  if (name == "no-prediction") return Algorithm::kNoPrediction;
  throw InvalidArgumentError("unknown algorithm '" + std::string(name) + "'");
}

const char* to_string(Algorithm alg) {
  switch (alg) {
    case Algorithm::kPd:
      return "pd";
    case Algorithm::kRand:
      return "rand";
    case Algorithm::kPerCommodity:
      return "per-commodity";
    case Algorithm::kNoPrediction:
      return "no-prediction";
  }
  return "unknown";
}

bool is_randomized(Algorithm alg) {
  return alg == Algorithm::kRand || alg == Algorithm::kPerCommodity;
}

AlgorithmRun run_algorithm(const Instance& inst, Algorithm alg, std::uint64_t seed) {
  AlgorithmRun out;
  double dual_sum = -1.0;
  switch (alg) {
    case Algorithm::kPd: {
      pd::PdOptions options;
      options.audit = true;
      pd::PdResult res = pd::run_pd(inst, options);
      for (const pd::TraceRecord& rec : res.state.trace) {
        if (rec.min_slack < -kTightEps) {
          out.violations.push_back("constraint slack " + format_number(rec.min_slack) +
                                   " at request " + std::to_string(rec.request));
          break;
        }
      }
      dual_sum = res.state.total_dual;
      out.solution = std::move(res.solution);
      break;
    }
    case Algorithm::kRand:
      out.solution = rnd::run_rand(inst, seed).solution;
      break;
    case Algorithm::kPerCommodity:
      out.solution = run_per_commodity(inst, seed);
      break;
    case Algorithm::kNoPrediction:
      out.solution = run_no_prediction(inst);
      break;
  }
  const FeasibilityReport report = check_feasible(inst, out.solution);
  if (!report.ok()) {
    out.violations.push_back("infeasible solution");
    return out;
  }
  out.cost = evaluate_cost(inst, out.solution);
  if (dual_sum >= 0.0 && out.cost.total > 3.0 * dual_sum + kTightEps) {
    out.violations.push_back("cost above three times the dual sum");
  }
  return out;
}

OptSource resolve_opt(const Instance& inst, const OracleLimits& limits) {
  try {
    return {solve_opt_bruteforce(inst, limits).cost, true};
  } catch (const LimitExceededError&) {
    if (inst.known_opt_upper_bound) return {*inst.known_opt_upper_bound, false};
    throw InvalidArgumentError(
        "no OPT source: instance exceeds oracle limits and has no known bound");
  }
}

RatioStats summarize(const std::vector<double>& values) {
  RatioStats s;
  s.trials = values.size();
  if (values.empty()) return s;
  double sum = 0.0;
  s.max = values.front();
  for (double v : values) {
    sum += v;
    s.max = std::max(s.max, v);
  }
  s.mean = sum / static_cast<double>(values.size());
  if (values.size() > 1) {
    double sq = 0.0;
    for (double v : values) sq += (v - s.mean) * (v - s.mean);
    s.stddev = std::sqrt(sq / static_cast<double>(values.size() - 1));
  }
  return s;
}

RatioStats estimate_ratio(const Instance& inst, Algorithm alg, std::size_t trials,
                          std::uint64_t base_seed, const OracleLimits& limits) {
  const OptSource opt = resolve_opt(inst, limits);
  const std::size_t runs = is_randomized(alg) ? trials : std::min<std::size_t>(trials, 1);
  std::vector<double> ratios;
  for (std::size_t t = 0; t < runs; ++t) {
    const double cost = run_algorithm(inst, alg, base_seed + t).cost.total;
    ratios.push_back(opt.value > 0.0 ? cost / opt.value : 1.0);
  }
  RatioStats s = summarize(ratios);
  s.opt_is_exact = opt.exact;
  return s;
}

std::size_t thread_count_from_env() {
  const char* env = std::getenv("OMFLP_THREADS");
  if (env == nullptr) return 1;
  std::size_t value = 0;
  const std::string_view text(env);
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || value == 0) return 1;
  return value;
}

std::string format_number(double value) {
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, ptr);
}

ExperimentResult run_experiment(std::string_view config_text,
                                const std::filesystem::path& base_dir,
                                std::size_t threads) {
  json config;
  try {
    config = json::parse(config_text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("unreadable config: ") + e.what());
  }

  ExperimentResult result;
  std::vector<std::string> ids;
  std::vector<Instance> instances;
  std::vector<Algorithm> algorithms;
  std::vector<OptSource> opts;
  std::size_t trials = 1;
  std::uint64_t base_seed = 0;
  bool timing = false;
  OracleLimits limits;
  try {
    for (const json& name : config.value("algorithms", json::array())) {
      algorithms.push_back(parse_algorithm(name.get<std::string>()));
    }
    trials = config.value("trials", std::size_t{1});
    base_seed = config.value("base_seed", std::uint64_t{0});
    timing = config.value("timing", false);
    if (config.contains("output")) result.output_path = config.at("output").get<std::string>();
    if (config.contains("oracle_limits")) {
      const json& l = config.at("oracle_limits");
      limits.max_points = l.value("max_points", limits.max_points);
      limits.max_commodities = l.value("max_commodities", limits.max_commodities);
      limits.max_requests = l.value("max_requests", limits.max_requests);
    }
    std::size_t k = 0;
    for (const json& entry : config.value("instances", json::array())) {
      ids.push_back(entry.value("id", "instance" + std::to_string(k++)));
      if (algorithms.empty()) continue;
      instances.push_back(instance_from_entry(entry, base_dir));
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad config: ") + e.what());
  }

  std::string csv = std::string(kCsvHeader) + "\n";
  if (algorithms.empty()) {
    result.csv = std::move(csv);
    return result;
  }
  for (const Instance& inst : instances) opts.push_back(resolve_opt(inst, limits));

  std::vector<Job> jobs;
  for (std::size_t i = 0; i < instances.size(); ++i) {
    for (Algorithm alg : algorithms) {
      const std::size_t runs = is_randomized(alg) ? trials : 1;
      for (std::size_t t = 0; t < runs; ++t) jobs.push_back({i, alg, base_seed + t});
    }
  }

  std::vector<TrialResult> rows(jobs.size());
  auto work = [&](std::size_t j) {
    const Job& job = jobs[j];
    const Instance& inst = instances[job.instance];
    const auto start = std::chrono::steady_clock::now();
    AlgorithmRun run = run_algorithm(inst, job.algorithm, job.seed);
    const auto stop = std::chrono::steady_clock::now();
    TrialResult& row = rows[j];
    row.instance_id = ids[job.instance];
    row.algorithm = job.algorithm;
    row.seed = job.seed;
    row.alg_cost = run.cost.total;
    row.opt_cost = opts[job.instance].value;
    row.opt_is_exact = opts[job.instance].exact;
    row.ratio = row.opt_cost > 0.0 ? row.alg_cost / row.opt_cost : 1.0;
    row.n = inst.num_requests();
    row.S_size = inst.num_commodities;
    if (timing) {
      row.runtime_ms = std::chrono::duration<double, std::milli>(stop - start).count();
    }
    row.violations = std::move(run.violations);
    if (row.opt_is_exact && row.ratio < 1.0 - 1e-9) {
      row.violations.push_back("ratio below 1 against exact OPT");
    }
  };

  const std::size_t workers = std::max<std::size_t>(1, std::min(threads, jobs.size()));
  if (workers == 1) {
    for (std::size_t j = 0; j < jobs.size(); ++j) work(j);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t j = next++; j < jobs.size(); j = next++) work(j);
      });
    }
    for (std::thread& t : pool) t.join();
  }

  auto emit = [&](const std::string& id, const char* alg, const std::string& seed,
                  double alg_cost, double opt_cost, bool exact, double ratio,
                  std::size_t n, int s, const std::string& runtime) {
    csv += id + "," + alg + "," + seed + "," + format_number(alg_cost) + "," +
           format_number(opt_cost) + "," + (exact ? "true" : "false") + "," +
           format_number(ratio) + "," + std::to_string(n) + "," + std::to_string(s) +
           "," + runtime + "\n";
  };
  std::size_t j = 0;
  while (j < rows.size()) {
    std::size_t end = j;
    while (end < rows.size() && jobs[end].instance == jobs[j].instance &&
           jobs[end].algorithm == jobs[j].algorithm) {
      ++end;
    }
    std::vector<double> costs;
    std::vector<double> ratios;
    for (std::size_t k = j; k < end; ++k) {
      const TrialResult& row = rows[k];
      emit(row.instance_id, to_string(row.algorithm), std::to_string(row.seed),
           row.alg_cost, row.opt_cost, row.opt_is_exact, row.ratio, row.n, row.S_size,
           row.runtime_ms ? format_number(*row.runtime_ms) : "");
      for (const std::string& v : row.violations) {
        result.violations.push_back(row.instance_id + "/" + to_string(row.algorithm) +
                                    "/seed " + std::to_string(row.seed) + ": " + v);
      }
      costs.push_back(row.alg_cost);
      ratios.push_back(row.ratio);
    }
    const TrialResult& head = rows[j];
    const RatioStats c = summarize(costs);
    const RatioStats r = summarize(ratios);
    const char* alg = to_string(head.algorithm);
    emit(head.instance_id, alg, "mean", c.mean, head.opt_cost, head.opt_is_exact,
         r.mean, head.n, head.S_size, "");
    emit(head.instance_id, alg, "stddev", c.stddev, head.opt_cost, head.opt_is_exact,
         r.stddev, head.n, head.S_size, "");
    emit(head.instance_id, alg, "max", c.max, head.opt_cost, head.opt_is_exact, r.max,
         head.n, head.S_size, "");
    j = end;
  }
  result.csv = std::move(csv);
  result.trials = std::move(rows);
  return result;
}

}  // namespace omflp
