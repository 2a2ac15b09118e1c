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

#ifndef OMFLP_INSTANCE_HPP_
#define OMFLP_INSTANCE_HPP_

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "omflp/commodity_set.hpp"
#include "omflp/cost_model.hpp"
#include "omflp/metric.hpp"

namespace omflp {

struct Request {
  PointIndex point = 0;
  CommoditySet commodities;
  std::size_t arrival_index = 0;

  friend bool operator==(const Request&, const Request&) = default;
};

// A metric, a cost model over |S| commodities, and the request sequence in
// arrival order. Adversary generators attach an upper bound on OPT.
struct Instance {
  MetricSpace metric;
  CostModel cost;
  int num_commodities = 0;
  std::vector<Request> requests;
  std::optional<double> known_opt_upper_bound;

  std::size_t num_requests() const { return requests.size(); }
  CommoditySet universe() const {
    return CommoditySet::full(num_commodities);
  }

  // Appends a request at `point`, assigning the next arrival index.
  void add_request(PointIndex point, CommoditySet commodities);

  friend bool operator==(const Instance&, const Instance&) = default;
};

// Throws StructuralError unless requests are consecutively indexed from 0,
// reference existing points, and demand nonempty subsets of S, and the cost
// model is defined over the same S.
void check_instance_structure(const Instance& inst);

// Instance documents. Costs, coordinates and distances accept JSON numbers
// or strings holding decimal or "p/q" literals. Throws ParseError on
// malformed documents, unknown kinds and out-of-range references.
Instance parse_instance(std::string_view text);
std::string serialize_instance(const Instance& inst);

Instance load_instance(const std::filesystem::path& path);
void save_instance(const Instance& inst, const std::filesystem::path& path);

}  // namespace omflp

#endif  // OMFLP_INSTANCE_HPP_
