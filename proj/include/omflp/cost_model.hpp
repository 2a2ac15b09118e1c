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

#ifndef OMFLP_COST_MODEL_HPP_
#define OMFLP_COST_MODEL_HPP_

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "omflp/commodity_set.hpp"
#include "omflp/metric.hpp"

namespace omflp {

// Facility construction costs f_m^sigma.
//
//   kTable:     explicit (point, configuration) -> cost entries; a missing
//               entry is an error when queried.
//   kSizeBased: f_m^sigma = g(|sigma|) for every point.
//   kPoly:      f_m^sigma = |sigma|^(x/2), x in [0, 2].
class CostModel {
 public:
  enum class Kind { kTable, kSizeBased, kPoly };
  using TableRow = std::unordered_map<std::uint64_t, double>;

  CostModel() = default;

  // `rows[m]` maps configuration bits to cost for point m.
  static CostModel table(int num_commodities, std::vector<TableRow> rows);
  // `g[k - 1]` is the cost of a configuration of size k, k = 1..|S|.
  static CostModel size_based(std::vector<double> g);
  static CostModel poly(int num_commodities, double x);

  Kind kind() const { return kind_; }
  int num_commodities() const { return num_commodities_; }
  CommoditySet universe() const {
    return CommoditySet::full(num_commodities_);
  }

  // Throws InvalidArgumentError for an empty or out-of-range configuration
  // and MissingCostError for an absent Table entry.
  double cost(PointIndex m, CommoditySet sigma) const;

  // Cost of a configuration of size k under kSizeBased / kPoly.
  double size_cost(int k) const;

  const std::vector<TableRow>& table_rows() const { return table_; }
  const std::vector<double>& g() const { return g_; }
  double exponent() const { return x_; }

  friend bool operator==(const CostModel& a, const CostModel& b);

 private:
  Kind kind_ = Kind::kPoly;
  int num_commodities_ = 0;
  std::vector<TableRow> table_;
  std::vector<double> g_;
  double x_ = 0.0;
};

double facility_cost(const CostModel& cost, PointIndex m, CommoditySet sigma);

// A configuration whose per-commodity cost undercuts the full set's:
// f_m^sigma / |sigma| < f_m^S / |S|. `point` is empty for size-only kinds.
struct Condition1Violation {
  std::optional<PointIndex> point;
  CommoditySet config;
  double per_commodity = 0.0;
  double full_per_commodity = 0.0;
};

// Checks f_m^sigma/|sigma| >= f_m^S/|S| for every point and every nonempty
// sigma (Table, |S| <= 20) or every size (SizeBased, Poly).
std::vector<Condition1Violation> check_condition1(const CostModel& cost,
                                                  const MetricSpace& metric);

// f_m^config > f_m^a + f_m^b with a | b == config. For size-only kinds the
// sets are representatives of the sizes involved.
struct SubadditivityViolation {
  std::optional<PointIndex> point;
  CommoditySet config;
  CommoditySet a;
  CommoditySet b;
  double cost = 0.0;
  double split_cost = 0.0;
};

// Table kind enumerates all (sigma, a, b) and requires |S| <= 12.
std::vector<SubadditivityViolation> check_subadditivity(
    const CostModel& cost, const MetricSpace& metric);

// Nondecreasing under set inclusion (checked over sizes for size-only kinds,
// over all sigma for Table with |S| <= 12).
bool is_monotone(const CostModel& cost, const MetricSpace& metric);

}  // namespace omflp

#endif  // OMFLP_COST_MODEL_HPP_
