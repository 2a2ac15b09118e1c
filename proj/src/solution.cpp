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

#include "omflp/solution.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "json.hpp"
#include "omflp/errors.hpp"

namespace omflp {
namespace {

using Json = nlohmann::ordered_json;

std::unordered_map<FacilityId, const Facility*> index_facilities(
    const Solution& sol) {
  std::unordered_map<FacilityId, const Facility*> index;
  for (const Facility& f : sol.facilities) index.emplace(f.id, &f);
  return index;
}

Json commodity_json(CommoditySet set) {
  Json out = Json::array();
  for (Commodity e : set) out.push_back(e);
  return out;
}

}  // namespace

FacilityId Solution::add_facility(const Instance& inst, PointIndex point,
                                  CommoditySet config) {
  const FacilityId id = facilities.size();
  facilities.push_back({id, point, config, inst.cost.cost(point, config)});
  return id;
}

FeasibilityReport check_feasible(const Instance& inst, const Solution& sol) {
  FeasibilityReport report;
  const auto index = index_facilities(sol);
  std::vector<CommoditySet> covered(inst.num_requests());
  for (const Assignment& asg : sol.assignments) {
    if (asg.request_index >= inst.num_requests()) {
      report.dangling.push_back("assignment for unknown request " +
                                std::to_string(asg.request_index));
      continue;
    }
    for (const Connection& conn : asg.connections) {
      auto it = index.find(conn.facility);
      if (it == index.end()) {
        report.dangling.push_back("request " + std::to_string(asg.request_index) +
                                  " references unknown facility " +
                                  std::to_string(conn.facility));
        continue;
      }
      covered[asg.request_index] =
          covered[asg.request_index] | (conn.commodities & it->second->config);
    }
  }
  for (std::size_t r = 0; r < inst.num_requests(); ++r) {
    for (Commodity e : inst.requests[r].commodities - covered[r]) {
      report.uncovered.push_back({r, e});
    }
  }
  return report;
}

CostBreakdown evaluate_cost(const Instance& inst, const Solution& sol) {
  const FeasibilityReport report = check_feasible(inst, sol);
  if (!report.dangling.empty()) {
    throw InfeasibleSolutionError(report.dangling.front());
  }
  if (!report.uncovered.empty()) {
    const auto& first = report.uncovered.front();
    throw InfeasibleSolutionError("request " + std::to_string(first.request) +
                                  " commodity " + std::to_string(first.commodity) +
                                  " is not covered");
  }
  CostBreakdown cost;
  for (const Facility& f : sol.facilities) cost.construction += f.paid_cost;
  const auto index = index_facilities(sol);
  for (const Assignment& asg : sol.assignments) {
    const PointIndex at = inst.requests[asg.request_index].point;
    std::unordered_set<FacilityId> seen;
    for (const Connection& conn : asg.connections) {
      if (seen.insert(conn.facility).second) {
        cost.connection += inst.metric.distance(at, index.at(conn.facility)->point);
      }
    }
  }
  cost.total = cost.construction + cost.connection;
  return cost;
}

Instance split_requests(const Instance& inst) {
  Instance out;
  out.metric = inst.metric;
  out.cost = inst.cost;
  out.num_commodities = inst.num_commodities;
  out.known_opt_upper_bound = inst.known_opt_upper_bound;
  for (const Request& req : inst.requests) {
    for (Commodity e : req.commodities) {
      out.add_request(req.point, CommoditySet::single(e));
    }
  }
  return out;
}

Solution lift_to_split(const Instance& inst, const Solution& sol) {
  Solution out;
  out.facilities = sol.facilities;
  const auto index = index_facilities(sol);
  std::vector<const Assignment*> by_request(inst.num_requests(), nullptr);
  for (const Assignment& asg : sol.assignments) {
    if (asg.request_index < by_request.size()) by_request[asg.request_index] = &asg;
  }
  std::size_t next = 0;
  for (std::size_t r = 0; r < inst.num_requests(); ++r) {
    for (Commodity e : inst.requests[r].commodities) {
      Assignment lifted{next++, {}};
      if (by_request[r] != nullptr) {
        for (const Connection& conn : by_request[r]->connections) {
          auto it = index.find(conn.facility);
          if (conn.commodities.contains(e) && it != index.end() &&
              it->second->config.contains(e)) {
            lifted.connections.push_back({conn.facility, CommoditySet::single(e)});
            break;
          }
        }
      }
      out.assignments.push_back(std::move(lifted));
    }
  }
  return out;
}

std::string serialize_solution(const Instance& inst, const Solution& sol) {
  Json doc;
  Json facilities = Json::array();
  for (const Facility& f : sol.facilities) {
    Json item;
    item["id"] = f.id;
    item["point"] = inst.metric.id(f.point);
    item["config"] = commodity_json(f.config);
    item["paid_cost"] = f.paid_cost;
    facilities.push_back(std::move(item));
  }
  doc["facilities"] = std::move(facilities);
  Json assignments = Json::array();
  for (const Assignment& asg : sol.assignments) {
    Json item;
    item["request"] = asg.request_index;
    Json conns = Json::array();
    for (const Connection& conn : asg.connections) {
      Json c;
      c["facility"] = conn.facility;
      c["commodities"] = commodity_json(conn.commodities);
      conns.push_back(std::move(c));
    }
    item["connections"] = std::move(conns);
    assignments.push_back(std::move(item));
  }
  doc["assignments"] = std::move(assignments);
  return doc.dump(2) + "\n";
}

Solution parse_solution(const Instance& inst, std::string_view text) {
  try {
    const Json doc = Json::parse(text.begin(), text.end());
    auto set_of = [&](const Json& list) {
      CommoditySet s;
      for (const auto& e : list) {
        const int idx = e.get<int>();
        if (idx < 0 || idx >= inst.num_commodities) {
          throw ParseError("commodity index out of range in solution");
        }
        s.insert(idx);
      }
      return s;
    };
    Solution sol;
    for (const auto& item : doc.at("facilities")) {
      const auto id = item.at("point").is_string()
                          ? item.at("point").get<std::string>()
                          : item.at("point").dump();
      auto p = inst.metric.find(id);
      if (!p) throw ParseError("solution references unknown point '" + id + "'");
      sol.facilities.push_back({item.at("id").get<FacilityId>(), *p,
                                set_of(item.at("config")),
                                item.at("paid_cost").get<double>()});
    }
    for (const auto& item : doc.at("assignments")) {
      Assignment asg{item.at("request").get<std::size_t>(), {}};
      for (const auto& c : item.at("connections")) {
        asg.connections.push_back(
            {c.at("facility").get<FacilityId>(), set_of(c.at("commodities"))});
      }
      sol.assignments.push_back(std::move(asg));
    }
    return sol;
  } catch (const Json::exception& ex) {
    throw ParseError(std::string("malformed solution document: ") + ex.what());
  }
}

}  // namespace omflp
