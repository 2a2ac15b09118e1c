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

#include "omflp/baselines.hpp"

#include "omflp/numeric.hpp"
#include "omflp/randomized.hpp"

namespace omflp {
namespace {

void add_connection(Assignment& asg, FacilityId f, Commodity e) {
  for (Connection& c : asg.connections) {
    if (c.facility == f) {
      c.commodities.insert(e);
      return;
    }
  }
  asg.connections.push_back({f, CommoditySet::single(e)});
}

}  // namespace

Solution run_per_commodity(const Instance& inst, std::uint64_t seed) {
  Solution merged;
  for (std::size_t r = 0; r < inst.num_requests(); ++r) {
    merged.assignments.push_back({r, {}});
  }
  for (Commodity e = 0; e < inst.num_commodities; ++e) {
    Instance sub;
    sub.metric = inst.metric;
    sub.num_commodities = 1;
    std::vector<CostModel::TableRow> rows(inst.metric.size());
    for (PointIndex m = 0; m < inst.metric.size(); ++m) {
      rows[m][1] = inst.cost.cost(m, CommoditySet::single(e));
    }
    sub.cost = CostModel::table(1, std::move(rows));
    std::vector<std::size_t> origin;
    for (std::size_t r = 0; r < inst.num_requests(); ++r) {
      if (!inst.requests[r].commodities.contains(e)) continue;
      sub.add_request(inst.requests[r].point, CommoditySet::single(0));
      origin.push_back(r);
    }
    if (origin.empty()) continue;

    const Solution part = rnd::run_rand(sub, seed + static_cast<std::uint64_t>(e)).solution;
    const FacilityId offset = merged.facilities.size();
    for (const Facility& f : part.facilities) {
      merged.add_facility(inst, f.point, CommoditySet::single(e));
    }
    for (const Assignment& asg : part.assignments) {
      for (const Connection& c : asg.connections) {
        add_connection(merged.assignments[origin[asg.request_index]],
                       offset + c.facility, e);
      }
    }
  }
  return merged;
}

Solution run_no_prediction(const Instance& inst) {
  Solution sol;
  for (std::size_t r = 0; r < inst.num_requests(); ++r) {
    const Request& req = inst.requests[r];
    Assignment asg{r, {}};
    for (Commodity e : req.commodities) {
      double connect = kInfinity;
      FacilityId nearest = 0;
      for (const Facility& f : sol.facilities) {
        if (!f.config.contains(e)) continue;
        const double d = inst.metric.distance(req.point, f.point);
        if (d < connect) {
          connect = d;
          nearest = f.id;
        }
      }
      double open = kInfinity;
      PointIndex where = 0;
      for (PointIndex m = 0; m < inst.metric.size(); ++m) {
        const double v = inst.cost.cost(m, CommoditySet::single(e)) +
                         inst.metric.distance(m, req.point);
        if (v < open) {
          open = v;
          where = m;
        }
      }
      if (open < connect) nearest = sol.add_facility(inst, where, CommoditySet::single(e));
      add_connection(asg, nearest, e);
    }
    sol.assignments.push_back(std::move(asg));
  }
  return sol;
}

}  // namespace omflp
