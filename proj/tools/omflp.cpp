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

// omflp: command-line workbench for online multi-commodity facility location.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "omflp/bench.hpp"
#include "omflp/cost_model.hpp"
#include "omflp/errors.hpp"
#include "omflp/generators.hpp"
#include "omflp/instance.hpp"
#include "omflp/oracle.hpp"
#include "omflp/primal_dual.hpp"
#include "omflp/randomized.hpp"
#include "omflp/solution.hpp"

namespace {

using nlohmann::ordered_json;

constexpr int kExitInvalid = 1;
constexpr int kExitViolation = 2;
constexpr int kExitRefused = 3;

void write_output(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw omflp::Error("cannot write " + path);
  out << text;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw omflp::Error("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int cmd_validate(const std::string& path) {
  const omflp::Instance inst = omflp::load_instance(path);
  const omflp::MetricReport metric = omflp::validate_metric(inst.metric.matrix());
  for (const auto& v : metric.violations) std::cout << "metric: " << v.describe() << "\n";
  std::size_t issues = metric.violations.size();
  try {
    for (const auto& v : omflp::check_condition1(inst.cost, inst.metric)) {
      std::cout << "condition: " << v.config.to_string() << " costs "
                << omflp::format_number(v.per_commodity) << " per commodity, full set "
                << omflp::format_number(v.full_per_commodity) << "\n";
      ++issues;
    }
    for (const auto& v : omflp::check_subadditivity(inst.cost, inst.metric)) {
      std::cout << "subadditivity: " << v.config.to_string() << " costs "
                << omflp::format_number(v.cost) << " > " << v.a.to_string() << " + "
                << v.b.to_string() << " = " << omflp::format_number(v.split_cost) << "\n";
      ++issues;
    }
  } catch (const omflp::Error& e) {
    std::cout << "skipped cost checks: " << e.what() << "\n";
  }
  std::cout << (issues == 0 ? "valid" : "invalid") << ": " << inst.metric.size()
            << " points, " << inst.num_commodities << " commodities, "
            << inst.num_requests() << " requests\n";
  return issues == 0 ? 0 : kExitInvalid;
}

int cmd_opt(const std::string& path, const omflp::OracleLimits& limits) {
  const omflp::Instance inst = omflp::load_instance(path);
  ordered_json out;
  try {
    const omflp::OptResult opt = omflp::solve_opt_bruteforce(inst, limits);
    out["cost"] = opt.cost;
    out["nodes_explored"] = opt.nodes_explored;
    out["solution"] = ordered_json::parse(omflp::serialize_solution(inst, opt.solution));
  } catch (const omflp::LimitExceededError& e) {
    out["refused"] = e.reason();
    out["message"] = e.what();
    std::cout << out.dump(2) << "\n";
    return kExitRefused;
  }
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_run(const std::string& path, const std::string& algorithm, std::uint64_t seed,
            const std::string& trace_path) {
  const omflp::Instance inst = omflp::load_instance(path);
  const omflp::Algorithm alg = omflp::parse_algorithm(algorithm);
  const omflp::AlgorithmRun run = omflp::run_algorithm(inst, alg, seed);
  if (!trace_path.empty()) {
    if (alg == omflp::Algorithm::kPd) {
      omflp::pd::PdOptions options;
      options.audit = true;
      write_output(omflp::pd::serialize_trace(inst, omflp::pd::run_pd(inst, options).state),
                   trace_path);
    } else if (alg == omflp::Algorithm::kRand) {
      omflp::rnd::RandOptions options;
      options.record_trace = true;
      write_output(omflp::rnd::serialize_rand_trace(
                       inst, omflp::rnd::run_rand(inst, seed, options).trace),
                   trace_path);
    } else {
      throw omflp::InvalidArgumentError("--trace is available for pd and rand only");
    }
  }
  ordered_json out;
  out["algorithm"] = omflp::to_string(alg);
  out["seed"] = seed;
  out["construction"] = run.cost.construction;
  out["connection"] = run.cost.connection;
  out["total"] = run.cost.total;
  out["violations"] = run.violations;
  out["solution"] = ordered_json::parse(omflp::serialize_solution(inst, run.solution));
  std::cout << out.dump(2) << "\n";
  return run.violations.empty() ? 0 : kExitViolation;
}

int cmd_bench(const std::string& config_path, const std::string& output) {
  const std::string text = read_file(config_path);
  const auto base = std::filesystem::path(config_path).parent_path();
  const omflp::ExperimentResult result =
      omflp::run_experiment(text, base, omflp::thread_count_from_env());
  std::string target = output;
  if (target.empty() && result.output_path) target = *result.output_path;
  write_output(result.csv, target);
  for (const std::string& v : result.violations) std::cerr << "violation: " << v << "\n";
  return result.violations.empty() ? 0 : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Online multi-commodity facility location workbench"};
  app.require_subcommand(1);

  std::string instance_path;
  auto* validate = app.add_subcommand("validate", "Check an instance document");
  validate->add_option("instance", instance_path, "Instance file")->required();

  auto* gen = app.add_subcommand("gen", "Generate an instance");
  gen->require_subcommand(1);
  std::string gen_output;
  std::uint64_t gen_seed = 0;
  int gen_s = 16;
  double gen_x = 1.0;
  omflp::RandomParams params;
  std::string metric_kind = "line";
  std::string cost_kind = "table";
  auto* gen_thm1 = gen->add_subcommand("thm1", "Single-point lower-bound instance");
  auto* gen_gx = gen->add_subcommand("gx", "Lower-bound sequence with cost k^(x/2)");
  auto* gen_random = gen->add_subcommand("random", "Seeded fuzz instance");
  for (auto* sub : {gen_thm1, gen_gx, gen_random}) {
    sub->add_option("-o,--output", gen_output, "Output file (default stdout)");
    sub->add_option("--seed", gen_seed, "Seed");
  }
  for (auto* sub : {gen_thm1, gen_gx}) {
    sub->add_option("--S", gen_s, "Number of commodities (perfect square)");
  }
  gen_gx->add_option("--x", gen_x, "Cost exponent in [0, 2]");
  gen_random->add_option("--points", params.num_points, "Number of points");
  gen_random->add_option("--commodities", params.num_commodities, "Number of commodities");
  gen_random->add_option("--requests", params.num_requests, "Number of requests");
  gen_random->add_option("--metric", metric_kind, "line or matrix")
      ->check(CLI::IsMember({"line", "matrix"}));
  gen_random->add_option("--cost", cost_kind, "table, size_based or poly")
      ->check(CLI::IsMember({"table", "size_based", "poly"}));
  gen_random->add_option("--max-set-size", params.max_set_size, "Largest demand set");

  auto* opt = app.add_subcommand("opt", "Exact offline optimum for small instances");
  omflp::OracleLimits limits;
  opt->add_option("instance", instance_path, "Instance file")->required();
  opt->add_option("--max-points", limits.max_points, "Point limit");
  opt->add_option("--max-commodities", limits.max_commodities, "Commodity limit");
  opt->add_option("--max-requests", limits.max_requests, "Request limit");

  auto* run = app.add_subcommand("run", "Run an online algorithm");
  std::string algorithm = "pd";
  std::uint64_t run_seed = 0;
  std::string trace_path;
  run->add_option("instance", instance_path, "Instance file")->required();
  run->add_option("--algorithm", algorithm, "pd, rand, per-commodity or no-prediction")
      ->check(CLI::IsMember({"pd", "rand", "per-commodity", "no-prediction"}));
  run->add_option("--seed", run_seed, "Seed for randomized algorithms");
  run->add_option("--trace", trace_path, "Write the event trace here (pd, rand)");

  auto* bench = app.add_subcommand("bench", "Run an experiment config and emit CSV");
  std::string config_path;
  std::string bench_output;
  bench->add_option("--config", config_path, "Experiment config (JSON)")->required();
  bench->add_option("-o,--output", bench_output, "CSV output (default from config or stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (validate->parsed()) return cmd_validate(instance_path);
    if (gen->parsed()) {
      omflp::Instance inst;
      if (gen_thm1->parsed()) {
        inst = omflp::gen_thm1(gen_s, gen_seed);
      } else if (gen_gx->parsed()) {
        inst = omflp::gen_gx(gen_s, gen_x, gen_seed);
      } else {
        params.metric = metric_kind == "line" ? omflp::MetricKind::kLine
                                              : omflp::MetricKind::kMatrix;
        params.cost_kind = cost_kind == "table"        ? omflp::CostModel::Kind::kTable
                           : cost_kind == "size_based" ? omflp::CostModel::Kind::kSizeBased
                                                       : omflp::CostModel::Kind::kPoly;
        inst = omflp::gen_random(params, gen_seed);
      }
      write_output(omflp::serialize_instance(inst), gen_output);
      return 0;
    }
    if (opt->parsed()) return cmd_opt(instance_path, limits);
    if (run->parsed()) return cmd_run(instance_path, algorithm, run_seed, trace_path);
    if (bench->parsed()) return cmd_bench(config_path, bench_output);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
  return 0;
}
