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

#ifndef OMFLP_BENCH_HPP_
#define OMFLP_BENCH_HPP_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "omflp/instance.hpp"
#include "omflp/oracle.hpp"
#include "omflp/solution.hpp"

namespace omflp {

enum class Algorithm { kPd, kRand, kPerCommodity, kNoPrediction };

// "pd", "rand", "per-commodity", "no-prediction".
Algorithm parse_algorithm(std::string_view name);
const char* to_string(Algorithm alg);
bool is_randomized(Algorithm alg);

struct AlgorithmRun {
  Solution solution;
  CostBreakdown cost;
  // Hard invariant breaches: infeasibility, negative constraint slack, a
  // cost above three times the dual sum.
  std::vector<std::string> violations;
};

AlgorithmRun run_algorithm(const Instance& inst, Algorithm alg,
                           std::uint64_t seed);

struct OptSource {
  double value = 0.0;
  bool exact = false;
};

// Exact oracle value when within limits, else the instance's known upper
// bound. Throws InvalidArgumentError when neither is available.
OptSource resolve_opt(const Instance& inst, const OracleLimits& limits = {});

struct TrialResult {
  std::string instance_id;
  Algorithm algorithm = Algorithm::kPd;
  std::uint64_t seed = 0;
  double alg_cost = 0.0;
  double opt_cost = 0.0;
  bool opt_is_exact = false;
  double ratio = 0.0;
  std::size_t n = 0;
  int S_size = 0;
  std::optional<double> runtime_ms;
  std::vector<std::string> violations;
};

struct RatioStats {
  double mean = 0.0;
  double stddev = 0.0;
  double max = 0.0;
  std::size_t trials = 0;
  bool opt_is_exact = false;
};

RatioStats summarize(const std::vector<double>& values);

// Seeds base_seed + t for t < trials; deterministic algorithms run once.
RatioStats estimate_ratio(const Instance& inst, Algorithm alg,
                          std::size_t trials, std::uint64_t base_seed,
                          const OracleLimits& limits = {});

// Worker count from OMFLP_THREADS (default 1).
std::size_t thread_count_from_env();

struct ExperimentResult {
  std::string csv;
  std::vector<TrialResult> trials;
  std::vector<std::string> violations;
  std::optional<std::string> output_path;
};

inline constexpr const char* kCsvHeader =
    "instance_id,algorithm,seed,alg_cost,opt_cost,opt_is_exact,ratio,n,"
    "S_size,runtime_ms";

// Runs the experiment described by a JSON config document. Relative instance
// paths resolve against base_dir. Rows come out in config order whatever the
// thread count.
ExperimentResult run_experiment(std::string_view config_text,
                                const std::filesystem::path& base_dir,
                                std::size_t threads);

// Shortest decimal that round-trips.
std::string format_number(double value);

}  // namespace omflp

#endif  // OMFLP_BENCH_HPP_
