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

#include "omflp/oracle.hpp"

#include <bit>
#include <cstdint>
#include <string>

#include "omflp/cost_model.hpp"
#include "omflp/errors.hpp"
#include "omflp/numeric.hpp"

namespace omflp {
namespace {

using Mask = std::uint64_t;

void check_limits(const Instance& inst, const OracleLimits& limits) {
  auto refuse = [](const char* reason, std::size_t have, std::size_t cap) {
    throw LimitExceededError(reason, std::string("oracle limit exceeded: ") + reason +
                                         " = " + std::to_string(have) +
                                         " > " + std::to_string(cap));
  };
  if (inst.metric.size() > limits.max_points) {
    refuse("points", inst.metric.size(), limits.max_points);
  }
  if (inst.num_commodities > limits.max_commodities) {
    refuse("commodities", inst.num_commodities, limits.max_commodities);
  }
  if (inst.num_requests() > limits.max_requests) {
    refuse("requests", inst.num_requests(), limits.max_requests);
  }
  if (!check_subadditivity(inst.cost, inst.metric).empty()) {
    throw LimitExceededError("not_subadditive",
                             "oracle needs a subadditive cost model");
  }
}

// Per-request cover by a configuration vector, with the chosen points.
struct Cover {
  double cost = kInfinity;
  Mask points = 0;
};

Cover cover_by_subsets(const Instance& inst, const std::vector<Mask>& config,
                       std::size_t r) {
  const Request& req = inst.requests[r];
  const std::size_t n_points = config.size();
  Mask open = 0;
  for (std::size_t m = 0; m < n_points; ++m) {
    if (config[m] & req.commodities.bits()) open |= Mask{1} << m;
  }
  Cover best;
  // Enumerate every subset of the useful open points.
  for (Mask sub = open;; sub = (sub - 1) & open) {
    Mask covered = 0;
    double cost = 0.0;
    for (Mask rest = sub; rest != 0; rest &= rest - 1) {
      const auto m = static_cast<std::size_t>(std::countr_zero(rest));
      covered |= config[m];
      cost += inst.metric.distance(req.point, m);
    }
    if ((req.commodities.bits() & ~covered) == 0 && cost < best.cost) {
      best = {cost, sub};
    }
    if (sub == 0) break;
  }
  return best;
}

// Compressed commodity-mask DP: state = which members of s_r are covered.
Cover cover_by_dp(const Instance& inst, const std::vector<Mask>& config,
                  std::size_t r) {
  const Request& req = inst.requests[r];
  const std::vector<Commodity> members = req.commodities.to_vector();
  const std::size_t k = members.size();
  const std::size_t states = std::size_t{1} << k;
  std::vector<double> dp(states, kInfinity);
  std::vector<Mask> used(states, 0);
  dp[0] = 0.0;
  for (std::size_t m = 0; m < config.size(); ++m) {
    std::size_t offer = 0;
    for (std::size_t b = 0; b < k; ++b) {
      if ((config[m] >> members[b]) & 1U) offer |= std::size_t{1} << b;
    }
    if (offer == 0) continue;
    const double d = inst.metric.distance(req.point, m);
    std::vector<double> next = dp;
    std::vector<Mask> next_used = used;
    for (std::size_t s = 0; s < states; ++s) {
      if (dp[s] == kInfinity) continue;
      const std::size_t t = s | offer;
      if (dp[s] + d < next[t]) {
        next[t] = dp[s] + d;
        next_used[t] = used[s] | (Mask{1} << m);
      }
    }
    dp = std::move(next);
    used = std::move(next_used);
  }
  return {dp[states - 1], used[states - 1]};
}

double construction_cost(const Instance& inst, const std::vector<Mask>& config) {
  double total = 0.0;
  for (std::size_t m = 0; m < config.size(); ++m) {
    if (config[m] != 0) total += inst.cost.cost(m, CommoditySet(config[m]));
  }
  return total;
}

Solution build_solution(const Instance& inst, const std::vector<Mask>& config,
                        bool use_dp) {
  Solution sol;
  std::vector<FacilityId> id(config.size(), 0);
  for (std::size_t m = 0; m < config.size(); ++m) {
    if (config[m] != 0) id[m] = sol.add_facility(inst, m, CommoditySet(config[m]));
  }
  for (std::size_t r = 0; r < inst.num_requests(); ++r) {
    const Cover cover =
        use_dp ? cover_by_dp(inst, config, r) : cover_by_subsets(inst, config, r);
    Assignment asg{r, {}};
    CommoditySet left = inst.requests[r].commodities;
    for (Mask rest = cover.points; rest != 0; rest &= rest - 1) {
      const auto m = static_cast<std::size_t>(std::countr_zero(rest));
      const CommoditySet part = left & CommoditySet(config[m]);
      if (part.empty()) continue;
      asg.connections.push_back({id[m], part});
      left = left - part;
    }
    sol.assignments.push_back(std::move(asg));
  }
  return sol;
}

class DepthFirstSearch {
 public:
  explicit DepthFirstSearch(const Instance& inst)
      : inst_(inst), config_(inst.metric.size(), 0) {}

  OptResult run() {
    visit(0, 0.0);
    OptResult out;
    out.solution = build_solution(inst_, best_config_, false);
    out.cost = evaluate_cost(inst_, out.solution).total;
    out.nodes_explored = nodes_;
    return out;
  }

 private:
  void visit(std::size_t m, double construction) {
    ++nodes_;
    if (construction >= best_) return;
    if (m == config_.size()) {
      double total = construction;
      for (std::size_t r = 0; r < inst_.num_requests() && total < best_; ++r) {
        total += cover_by_subsets(inst_, config_, r).cost;
      }
      if (total < best_) {
        best_ = total;
        best_config_ = config_;
      }
      return;
    }
    const Mask limit = CommoditySet::full(inst_.num_commodities).bits();
    for (Mask sigma = 0;; ++sigma) {
      config_[m] = sigma;
      const double f =
          sigma == 0 ? 0.0 : inst_.cost.cost(m, CommoditySet(sigma));
      visit(m + 1, construction + f);
      if (sigma == limit) break;
    }
    config_[m] = 0;
  }

  const Instance& inst_;
  std::vector<Mask> config_;
  std::vector<Mask> best_config_;
  double best_ = kInfinity;
  std::size_t nodes_ = 0;
};

OptResult reverse_counter(const Instance& inst) {
  const std::size_t n_points = inst.metric.size();
  const Mask limit = CommoditySet::full(inst.num_commodities).bits();
  std::vector<Mask> config(n_points, 0);
  std::vector<Mask> best_config = config;
  double best = kInfinity;
  std::size_t nodes = 0;
  while (true) {
    ++nodes;
    double total = construction_cost(inst, config);
    for (std::size_t r = 0; r < inst.num_requests(); ++r) {
      total += cover_by_dp(inst, config, r).cost;
    }
    if (total < best) {
      best = total;
      best_config = config;
    }
    // Advance: point 0 is the least significant digit.
    bool advanced = false;
    for (std::size_t digit = 0; digit < n_points; ++digit) {
      if (config[digit] < limit) {
        ++config[digit];
        advanced = true;
        break;
      }
      config[digit] = 0;
    }
    if (!advanced) break;
  }
  OptResult out;
  out.solution = build_solution(inst, best_config, true);
  out.cost = evaluate_cost(inst, out.solution).total;
  out.nodes_explored = nodes;
  return out;
}

}  // namespace

OptResult solve_opt_bruteforce(const Instance& inst, const OracleLimits& limits,
                               EnumerationOrder order) {
  check_limits(inst, limits);
  if (inst.num_requests() == 0) return {};
  return order == EnumerationOrder::kDepthFirst ? DepthFirstSearch(inst).run()
                                                : reverse_counter(inst);
}

std::vector<DualViolation> check_dual_feasibility(const Instance& inst,
                                                  const DualCertificate& cert) {
  if (inst.num_commodities > 12) {
    throw LimitExceededError("commodities",
                             "dual feasibility check needs |S| <= 12");
  }
  std::vector<DualViolation> out;
  const Mask limit = CommoditySet::full(inst.num_commodities).bits();
  for (PointIndex m = 0; m < inst.metric.size(); ++m) {
    for (Mask bits = 1; bits <= limit; ++bits) {
      const CommoditySet sigma(bits);
      double lhs = 0.0;
      for (std::size_t r = 0; r < inst.num_requests(); ++r) {
        const Request& req = inst.requests[r];
        double bid = 0.0;
        for (Commodity e : req.commodities & sigma) bid += cert.gamma * cert.a[r][e];
        lhs += positive_part(bid - inst.metric.distance(m, req.point));
      }
      const double rhs = inst.cost.cost(m, sigma);
      if (lhs > rhs + kTightEps) out.push_back({m, sigma, lhs, rhs});
    }
  }
  return out;
}

double dual_objective(const DualCertificate& cert) {
  double sum = 0.0;
  for (const auto& row : cert.a) {
    for (double v : row) sum += v;
  }
  return cert.gamma * sum;
}

}  // namespace omflp
