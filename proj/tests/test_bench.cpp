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

#include <cmath>
#include <string>

#include "doctest.h"
#include "omflp/bench.hpp"
#include "omflp/bounds.hpp"
#include "omflp/errors.hpp"
#include "omflp/generators.hpp"

using namespace omflp;

namespace {

std::size_t count_lines(const std::string& s) {
  std::size_t n = 0;
  for (char c : s) n += c == '\n';
  return n;
}

}  // namespace

TEST_CASE("algorithm names round-trip") {
  for (Algorithm a : {Algorithm::kPd, Algorithm::kRand, Algorithm::kPerCommodity,
                      Algorithm::kNoPrediction}) {
    CHECK(parse_algorithm(to_string(a)) == a);
  }
  CHECK_THROWS_AS(parse_algorithm("greedy"), InvalidArgumentError);
  CHECK(is_randomized(Algorithm::kRand));
  CHECK_FALSE(is_randomized(Algorithm::kPd));
}

TEST_CASE("format_number uses the shortest round-trip form") {
  CHECK(format_number(1.0) == "1");
  CHECK(format_number(0.1) == "0.1");
  CHECK(format_number(2.5) == "2.5");
  CHECK(std::stod(format_number(1.0 / 3.0)) == 1.0 / 3.0);
}

TEST_CASE("summarize") {
  const RatioStats s = summarize({1.0, 3.0});
  CHECK(s.mean == 2.0);
  CHECK(s.max == 3.0);
  CHECK(s.trials == 2);
  CHECK(s.stddev == doctest::Approx(std::sqrt(2.0)));
}

TEST_CASE("estimate_ratio examples") {
  Instance one;
  const double origin[] = {0.0};
  one.metric = MetricSpace::line(origin);
  one.cost = CostModel::size_based({5.0});
  one.num_commodities = 1;
  one.add_request(0, CommoditySet{0});
  const RatioStats pd = estimate_ratio(one, Algorithm::kPd, 1, 0);
  CHECK(pd.mean == 1.0);
  CHECK(pd.opt_is_exact);

  const Instance thm1 = gen_thm1(16, 5);
  const RatioStats np = estimate_ratio(thm1, Algorithm::kNoPrediction, 1, 0);
  CHECK(np.mean == 4.0);
  CHECK_FALSE(np.opt_is_exact);

  const RatioStats pd16 = estimate_ratio(thm1, Algorithm::kPd, 1, 0);
  CHECK(pd16.max <= pd_ratio_ceiling(16, thm1.num_requests()) + 1e-9);
}

TEST_CASE("run_experiment with no algorithms writes only the header") {
  const ExperimentResult res = run_experiment(
      R"({"instances": [{"id": "a", "gen": "thm1", "S": 4}], "algorithms": []})", ".", 1);
  CHECK(res.csv == std::string(kCsvHeader) + "\n");
  CHECK(res.violations.empty());
}

TEST_CASE("run_experiment rows and aggregates") {
  const char* config = R"({
    "instances": [{"id": "r", "gen": "random", "seed": 3, "points": 3,
                   "commodities": 2, "requests": 5}],
    "algorithms": ["pd", "rand"],
    "trials": 3,
    "base_seed": 10
  })";
  const ExperimentResult res = run_experiment(config, ".", 1);
  // pd: one row plus three aggregates; rand: three rows plus three aggregates.
  CHECK(count_lines(res.csv) == 1 + 4 + 6);
  CHECK(res.violations.empty());
  for (const TrialResult& t : res.trials) {
    CHECK(t.opt_is_exact);
    CHECK(t.ratio >= 1.0 - 1e-12);
    CHECK_FALSE(t.runtime_ms.has_value());
  }
}

TEST_CASE("run_experiment output does not depend on the thread count") {
  const char* config = R"({
    "instances": [{"id": "t", "gen": "thm1", "S": 16, "seed": 2},
                  {"id": "g", "gen": "gx", "S": 16, "x": 1},
                  {"id": "r", "gen": "random", "seed": 7, "metric": "matrix"}],
    "algorithms": ["pd", "rand", "per-commodity", "no-prediction"],
    "trials": 8,
    "base_seed": 1
  })";
  const std::string one = run_experiment(config, ".", 1).csv;
  CHECK(one == run_experiment(config, ".", 4).csv);
  CHECK(one == run_experiment(config, ".", 3).csv);
}

TEST_CASE("run_experiment rejects bad configs") {
  CHECK_THROWS_AS(run_experiment("{", ".", 1), ParseError);
  CHECK_THROWS(run_experiment(R"({"instances": [{"gen": "nope"}], "algorithms": ["pd"]})",
                              ".", 1));
  CHECK_THROWS(run_experiment(R"({"instances": [], "algorithms": ["best"]})", ".", 1));
}
