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
#include <vector>

#include "doctest.h"
#include "fuzz.hpp"
#include "omflp/baselines.hpp"
#include "omflp/bounds.hpp"
#include "omflp/errors.hpp"
#include "omflp/generators.hpp"
#include "omflp/oracle.hpp"
#include "omflp/primal_dual.hpp"
#include "omflp/randomized.hpp"

using namespace omflp;

namespace {

Instance line_requests(std::vector<double> coords, std::vector<PointIndex> at, double f) {
  Instance inst;
  inst.metric = MetricSpace::line(coords);
  inst.cost = CostModel::size_based({f});
  inst.num_commodities = 1;
  for (PointIndex p : at) inst.add_request(p, CommoditySet{0});
  return inst;
}

}  // namespace

TEST_CASE("harmonic numbers") {
  CHECK(harmonic(0) == 0.0);
  CHECK(harmonic(1) == 1.0);
  CHECK(harmonic(2) == 1.5);
  // H_10 = 7381/2520.
  CHECK(std::abs(harmonic(10) - 7381.0 / 2520.0) <= 1e-12);
  CHECK(std::abs(harmonic(10) - 2.9289682539682538) <= 1e-12);
}

TEST_CASE("gamma scaling factor") {
  CHECK(gamma(1, 1) == doctest::Approx(0.2).epsilon(1e-12));
  CHECK(std::abs(gamma(4, 10) - 252.0 / 7381.0) <= 1e-6);
  CHECK(std::abs(gamma(4, 10) - 0.0341417) <= 1e-6);
  CHECK(gamma(16, 1) == doctest::Approx(0.05).epsilon(1e-12));
  CHECK_THROWS_AS(gamma(0, 1), InvalidArgumentError);
}

TEST_CASE("oracle examples") {
  // |S| = 4: S' has two elements and g = ceil(k/2).
  const Instance thm1 = gen_thm1(4, 9);
  REQUIRE(thm1.num_requests() == 2);
  const OptResult a = solve_opt_bruteforce(thm1);
  CHECK(a.cost == 1.0);
  CHECK(check_feasible(thm1, a.solution).ok());

  const Instance two = line_requests({0.0, 10.0}, {0, 1}, 1.0);
  const OptResult b = solve_opt_bruteforce(two);
  CHECK(b.cost == 2.0);
  CHECK(b.solution.facilities.size() == 2);

  const Instance empty = line_requests({0.0}, {}, 1.0);
  CHECK(solve_opt_bruteforce(empty).cost == 0.0);
}

TEST_CASE("oracle refuses oversized or non-subadditive instances") {
  const Instance wide = line_requests({0, 1, 2, 3, 4}, {0}, 1.0);
  try {
    solve_opt_bruteforce(wide);
    FAIL("expected refusal");
  } catch (const LimitExceededError& e) {
    CHECK(e.reason() == "points");
  }
  CHECK_THROWS_AS(solve_opt_bruteforce(gen_thm1(16, 1)), LimitExceededError);
  CHECK_NOTHROW(solve_opt_bruteforce(gen_thm1(16, 1), {1, 16, 4}));

  Instance bad;
  const double origin[] = {0.0};
  bad.metric = MetricSpace::line(origin);
  std::vector<CostModel::TableRow> rows(1);
  rows[0][0b01] = 1.0;
  rows[0][0b10] = 1.0;
  rows[0][0b11] = 3.0;
  bad.cost = CostModel::table(2, rows);
  bad.num_commodities = 2;
  bad.add_request(0, CommoditySet{0, 1});
  try {
    solve_opt_bruteforce(bad);
    FAIL("expected refusal");
  } catch (const LimitExceededError& e) {
    CHECK(e.reason() == "not_subadditive");
  }
}

TEST_CASE("both enumeration orders agree and beat every online answer") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Instance inst = testing::exact_fuzz_instance(seed);
    const OptResult dfs = solve_opt_bruteforce(inst, {}, EnumerationOrder::kDepthFirst);
    const OptResult counter =
        solve_opt_bruteforce(inst, {}, EnumerationOrder::kReverseCounter);
    CHECK(dfs.cost == counter.cost);
    CHECK(check_feasible(inst, dfs.solution).ok());
    CHECK(check_feasible(inst, counter.solution).ok());
    CHECK(evaluate_cost(inst, counter.solution).total == counter.cost);

    CHECK(evaluate_cost(inst, pd::run_pd(inst).solution).total >= dfs.cost - 1e-9);
    CHECK(evaluate_cost(inst, rnd::run_rand(inst, seed).solution).total >= dfs.cost - 1e-9);
    CHECK(evaluate_cost(inst, run_no_prediction(inst)).total >= dfs.cost - 1e-9);
    CHECK(evaluate_cost(inst, run_per_commodity(inst, seed)).total >= dfs.cost - 1e-9);
  }
}

TEST_CASE("dual feasibility: zero duals") {
  const Instance inst = line_requests({0.0, 0.3}, {0, 1}, 1.0);
  DualCertificate cert{{{0.0}, {0.0}}, 1.0};
  CHECK(check_dual_feasibility(inst, cert).empty());
}

TEST_CASE("dual feasibility: unscaled duals of the line trace") {
  Instance inst = line_requests({0.0, 0.3}, {0, 1}, 1.0);
  pd::PdResult two = pd::run_pd(inst);
  // (1 - 0)_+ + (0.3 - 0.3)_+ = 1 <= 1 at point 0; 0.7 + 0.3 at the other.
  CHECK(check_dual_feasibility(inst, {two.state.a, 1.0}).empty());

  inst.add_request(1, CommoditySet{0});
  pd::PdResult three = pd::run_pd(inst);
  CHECK(three.state.a[2][0] == doctest::Approx(0.3));
  const auto bad = check_dual_feasibility(inst, {three.state.a, 1.0});
  REQUIRE(bad.size() == 1);
  CHECK(bad[0].point == 1);
  CHECK(bad[0].lhs == doctest::Approx(1.3));
  CHECK(bad[0].rhs == 1.0);
  CHECK(check_dual_feasibility(inst, {three.state.a, gamma(1, 3)}).empty());
}

TEST_CASE("scaled pd duals are feasible and bounded by OPT") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Instance inst = testing::exact_fuzz_instance(seed);
    const pd::PdResult res = pd::run_pd(inst);
    const DualCertificate cert{res.state.a,
                               gamma(inst.num_commodities, inst.num_requests())};
    CHECK(check_dual_feasibility(inst, cert).empty());
    const double opt = solve_opt_bruteforce(inst).cost;
    CHECK(dual_objective(cert) <= opt + 1e-9);
    const double ceiling = pd_ratio_ceiling(inst.num_commodities, inst.num_requests());
    CHECK(ceiling == doctest::Approx(15.0 * std::sqrt(inst.num_commodities) *
                                     harmonic(inst.num_requests())));
    CHECK(evaluate_cost(inst, res.solution).total <= ceiling * opt + 1e-6);
  }
}
