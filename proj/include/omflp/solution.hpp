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

#ifndef OMFLP_SOLUTION_HPP_
#define OMFLP_SOLUTION_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "omflp/commodity_set.hpp"
#include "omflp/instance.hpp"

namespace omflp {

using FacilityId = std::size_t;

struct Facility {
  FacilityId id = 0;
  PointIndex point = 0;
  CommoditySet config;
  // Actual f_m^config paid, never a rounded class value.
  double paid_cost = 0.0;

  friend bool operator==(const Facility&, const Facility&) = default;
};

// Request is served `commodities` by `facility`.
struct Connection {
  FacilityId facility = 0;
  CommoditySet commodities;

  friend bool operator==(const Connection&, const Connection&) = default;
};

struct Assignment {
  std::size_t request_index = 0;
  std::vector<Connection> connections;

  friend bool operator==(const Assignment&, const Assignment&) = default;
};

struct Solution {
  std::vector<Facility> facilities;
  std::vector<Assignment> assignments;

  // Appends a facility with the next free id and returns that id.
  FacilityId add_facility(const Instance& inst, PointIndex point,
                          CommoditySet config);

  friend bool operator==(const Solution&, const Solution&) = default;
};

struct CostBreakdown {
  double construction = 0.0;
  double connection = 0.0;
  double total = 0.0;
};

struct UncoveredDemand {
  std::size_t request = 0;
  Commodity commodity = 0;
};

struct FeasibilityReport {
  // Demanded commodities with no connected facility offering them.
  std::vector<UncoveredDemand> uncovered;
  // Connections naming facility ids that do not exist.
  std::vector<std::string> dangling;

  bool ok() const { return uncovered.empty() && dangling.empty(); }
};

FeasibilityReport check_feasible(const Instance& inst, const Solution& sol);

// Construction cost plus, per request, the distance to each distinct
// connected facility (counted once however many commodities it serves).
// Throws InfeasibleSolutionError naming the first uncovered demand.
CostBreakdown evaluate_cost(const Instance& inst, const Solution& sol);

// Replaces every request demanding k commodities by k consecutive
// single-commodity requests at the same point.
Instance split_requests(const Instance& inst);

// Maps a solution of `inst` onto split_requests(inst): each split request is
// connected to the facility that served its commodity.
Solution lift_to_split(const Instance& inst, const Solution& sol);

std::string serialize_solution(const Instance& inst, const Solution& sol);
Solution parse_solution(const Instance& inst, std::string_view text);

}  // namespace omflp

#endif  // OMFLP_SOLUTION_HPP_
