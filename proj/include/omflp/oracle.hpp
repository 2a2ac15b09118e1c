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

#ifndef OMFLP_ORACLE_HPP_
#define OMFLP_ORACLE_HPP_

#include <cstddef>
#include <vector>

#include "omflp/commodity_set.hpp"
#include "omflp/instance.hpp"
#include "omflp/solution.hpp"

namespace omflp {

struct OracleLimits {
  std::size_t max_points = 4;
  int max_commodities = 4;
  std::size_t max_requests = 10;
};

enum class EnumerationOrder {
  // Depth-first over points with construction-cost pruning; each request is
  // covered by scanning subsets of the open facilities.
  kDepthFirst,
  // Flat counter over configuration vectors, first point varying fastest, no
  // pruning; each request is covered by a DP over commodity masks.
  kReverseCounter,
};

struct OptResult {
  Solution solution;
  double cost = 0.0;
  std::size_t nodes_explored = 0;
};

// Exact offline optimum by enumerating one configuration per point (empty
// allowed). Throws LimitExceededError when the instance exceeds `limits`
// (reasons "points", "commodities", "requests") or when the cost model is
// not subadditive (reason "not_subadditive").
OptResult solve_opt_bruteforce(
    const Instance& inst, const OracleLimits& limits = {},
    EnumerationOrder order = EnumerationOrder::kDepthFirst);

struct DualCertificate {
  std::vector<std::vector<double>> a;  // a[r][e]
  double gamma = 1.0;
};

struct DualViolation {
  PointIndex point = 0;
  CommoditySet config;
  double lhs = 0.0;
  double rhs = 0.0;
};

// Every (m, sigma) with sum_r (sum_{e in s_r & sigma} gamma a_re - d(m,r))_+
// > f_m^sigma + kTightEps. Needs |S| <= 12.
std::vector<DualViolation> check_dual_feasibility(const Instance& inst,
                                                  const DualCertificate& cert);

// gamma * sum of all duals.
double dual_objective(const DualCertificate& cert);

}  // namespace omflp

#endif  // OMFLP_ORACLE_HPP_
