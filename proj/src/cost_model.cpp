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

#include "omflp/cost_model.hpp"

#include <cmath>
#include <string>

#include "omflp/errors.hpp"
#include "omflp/numeric.hpp"

namespace omflp {
namespace {

void check_universe_size(int k) {
  if (k < 1 || k > kMaxCommodities) {
    throw InvalidArgumentError("number of commodities must be in [1, 64], got " +
                               std::to_string(k));
  }
}

// Dense per-point cost arrays indexed by configuration bits (entry 0 unused).
std::vector<std::vector<double>> dense_table(const CostModel& cost,
                                             std::size_t num_points) {
  const std::uint64_t count = std::uint64_t{1} << cost.num_commodities();
  std::vector<std::vector<double>> dense(num_points,
                                         std::vector<double>(count, 0.0));
  for (PointIndex m = 0; m < num_points; ++m) {
    for (std::uint64_t bits = 1; bits < count; ++bits) {
      dense[m][bits] = cost.cost(m, CommoditySet(bits));
    }
  }
  return dense;
}

}  // namespace

CostModel CostModel::table(int num_commodities, std::vector<TableRow> rows) {
  check_universe_size(num_commodities);
  const CommoditySet universe = CommoditySet::full(num_commodities);
  for (std::size_t m = 0; m < rows.size(); ++m) {
    for (const auto& [bits, value] : rows[m]) {
      const CommoditySet sigma(bits);
      if (sigma.empty() || !sigma.is_subset_of(universe)) {
        throw InvalidArgumentError("table entry at point " + std::to_string(m) +
                                   " has invalid configuration " +
                                   sigma.to_string());
      }
      if (!(value > 0.0) || !std::isfinite(value)) {
        throw InvalidArgumentError("table cost must be positive and finite");
      }
    }
  }
  CostModel model;
  model.kind_ = Kind::kTable;
  model.num_commodities_ = num_commodities;
  model.table_ = std::move(rows);
  return model;
}

CostModel CostModel::size_based(std::vector<double> g) {
  check_universe_size(static_cast<int>(g.size()));
  for (double value : g) {
    if (!(value > 0.0) || !std::isfinite(value)) {
      throw InvalidArgumentError("size-based costs must be positive and finite");
    }
  }
  CostModel model;
  model.kind_ = Kind::kSizeBased;
  model.num_commodities_ = static_cast<int>(g.size());
  model.g_ = std::move(g);
  return model;
}

CostModel CostModel::poly(int num_commodities, double x) {
  check_universe_size(num_commodities);
  if (!(x >= 0.0 && x <= 2.0)) {
    throw InvalidArgumentError("poly exponent x must lie in [0, 2], got " +
                               std::to_string(x));
  }
  CostModel model;
  model.kind_ = Kind::kPoly;
  model.num_commodities_ = num_commodities;
  model.x_ = x;
  return model;
}

double CostModel::size_cost(int k) const {
  switch (kind_) {
    case Kind::kSizeBased:
      return g_[k - 1];
    case Kind::kPoly:
      return std::pow(static_cast<double>(k), x_ / 2.0);
    case Kind::kTable:
      break;
  }
  throw InvalidArgumentError("size_cost is undefined for table costs");
}

double CostModel::cost(PointIndex m, CommoditySet sigma) const {
  if (sigma.empty() || !sigma.is_subset_of(universe())) {
    throw InvalidArgumentError("configuration " + sigma.to_string() +
                               " is empty or outside the universe");
  }
  if (kind_ != Kind::kTable) return size_cost(sigma.size());
  if (m < table_.size()) {
    auto it = table_[m].find(sigma.bits());
    if (it != table_[m].end()) return it->second;
  }
  throw MissingCostError("no table cost for point " + std::to_string(m) +
                         " and configuration " + sigma.to_string());
}

bool operator==(const CostModel& a, const CostModel& b) {
  return a.kind_ == b.kind_ && a.num_commodities_ == b.num_commodities_ &&
         a.table_ == b.table_ && a.g_ == b.g_ && a.x_ == b.x_;
}

double facility_cost(const CostModel& cost, PointIndex m, CommoditySet sigma) {
  return cost.cost(m, sigma);
}

std::vector<Condition1Violation> check_condition1(const CostModel& cost,
                                                  const MetricSpace& metric) {
  std::vector<Condition1Violation> out;
  const int k = cost.num_commodities();
  if (cost.kind() != CostModel::Kind::kTable) {
    const double full = cost.size_cost(k) / k;
    for (int size = 1; size <= k; ++size) {
      const double per = cost.size_cost(size) / size;
      if (per < full - kTightEps) {
        out.push_back({std::nullopt, CommoditySet::full(size), per, full});
      }
    }
    return out;
  }
  if (k > 20) {
    throw InvalidArgumentError("check_condition1 enumerates 2^|S| sets; |S| <= 20");
  }
  const CommoditySet universe = cost.universe();
  const std::uint64_t count = std::uint64_t{1} << k;
  for (PointIndex m = 0; m < metric.size(); ++m) {
    const double full = cost.cost(m, universe) / k;
    for (std::uint64_t bits = 1; bits < count; ++bits) {
      const CommoditySet sigma(bits);
      const double per = cost.cost(m, sigma) / sigma.size();
      if (per < full - kTightEps) out.push_back({m, sigma, per, full});
    }
  }
  return out;
}

std::vector<SubadditivityViolation> check_subadditivity(
    const CostModel& cost, const MetricSpace& metric) {
  std::vector<SubadditivityViolation> out;
  const int k = cost.num_commodities();
  if (cost.kind() != CostModel::Kind::kTable) {
    // Sets of sizes i <= j can union to any size in [j, min(i + j, |S|)].
    for (int i = 1; i <= k; ++i) {
      for (int j = i; j <= k; ++j) {
        for (int size = j; size <= std::min(i + j, k); ++size) {
          const double whole = cost.size_cost(size);
          const double split = cost.size_cost(i) + cost.size_cost(j);
          if (whole > split + kTightEps) {
            const CommoditySet sigma = CommoditySet::full(size);
            const CommoditySet a = CommoditySet::full(i);
            const CommoditySet b = sigma - CommoditySet::full(size - j);
            out.push_back({std::nullopt, sigma, a, b, whole, split});
          }
        }
      }
    }
    return out;
  }
  if (k > 12) {
    throw InvalidArgumentError("check_subadditivity enumerates 3^|S| splits; |S| <= 12");
  }
  const auto dense = dense_table(cost, metric.size());
  const std::uint64_t count = std::uint64_t{1} << k;
  for (PointIndex m = 0; m < metric.size(); ++m) {
    const auto& f = dense[m];
    for (std::uint64_t sigma = 1; sigma < count; ++sigma) {
      // a ranges over nonempty proper subsets, b = (sigma \ a) | c, c <= a.
      for (std::uint64_t a = (sigma - 1) & sigma; a != 0; a = (a - 1) & sigma) {
        const std::uint64_t rest = sigma & ~a;
        for (std::uint64_t c = a;; c = (c - 1) & a) {
          const std::uint64_t b = rest | c;
          if (b != sigma && a <= b) {
            const double split = f[a] + f[b];
            if (f[sigma] > split + kTightEps) {
              out.push_back({m, CommoditySet(sigma), CommoditySet(a),
                             CommoditySet(b), f[sigma], split});
            }
          }
          if (c == 0) break;
        }
      }
    }
  }
  return out;
}

bool is_monotone(const CostModel& cost, const MetricSpace& metric) {
  const int k = cost.num_commodities();
  if (cost.kind() != CostModel::Kind::kTable) {
    for (int size = 1; size < k; ++size) {
      if (cost.size_cost(size) > cost.size_cost(size + 1) + kTightEps) {
        return false;
      }
    }
    return true;
  }
  if (k > 12) {
    throw InvalidArgumentError("is_monotone enumerates 2^|S| sets; |S| <= 12");
  }
  const auto dense = dense_table(cost, metric.size());
  const std::uint64_t count = std::uint64_t{1} << k;
  for (PointIndex m = 0; m < metric.size(); ++m) {
    for (std::uint64_t sigma = 1; sigma < count; ++sigma) {
      for (int e = 0; e < k; ++e) {
        const std::uint64_t bigger = sigma | (std::uint64_t{1} << e);
        if (bigger != sigma && dense[m][sigma] > dense[m][bigger] + kTightEps) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace omflp
