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

#include "omflp/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "omflp/errors.hpp"
#include "omflp/random.hpp"

namespace omflp {
namespace {

int exact_sqrt(int k) {
  if (k < 1) throw InvalidArgumentError("|S| must be positive");
  const int root = static_cast<int>(std::lround(std::sqrt(static_cast<double>(k))));
  if (root * root != k) {
    throw InvalidArgumentError("|S| = " + std::to_string(k) + " is not a perfect square");
  }
  return root;
}

Instance adversarial_sequence(int num_commodities, CostModel cost,
                              std::uint64_t seed) {
  const int root = exact_sqrt(num_commodities);
  Rng rng(seed);
  std::vector<Commodity> order(num_commodities);
  std::iota(order.begin(), order.end(), 0);
  rng.shuffle(order);

  Instance inst;
  const double origin[] = {0.0};
  inst.metric = MetricSpace::line(origin);
  inst.cost = std::move(cost);
  inst.num_commodities = num_commodities;
  for (int k = 0; k < root; ++k) inst.add_request(0, CommoditySet::single(order[k]));
  return inst;
}

double dyadic(Rng& rng, double lo, double hi, double denom) {
  return static_cast<double>(rng.between(static_cast<std::int64_t>(lo * denom),
                                         static_cast<std::int64_t>(hi * denom))) /
         denom;
}

MetricSpace random_metric(const RandomParams& params, Rng& rng) {
  const std::size_t n = params.num_points;
  if (params.metric == MetricKind::kLine) {
    std::vector<double> coords(n);
    for (double& x : coords) x = dyadic(rng, 0.0, 10.0, 4.0);
    return MetricSpace::line(coords);
  }
  DistanceMatrix d(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) d[i][j] = d[j][i] = dyadic(rng, 0.25, 10.0, 4.0);
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    }
  }
  std::vector<std::string> ids(n);
  for (std::size_t i = 0; i < n; ++i) ids[i] = std::to_string(i);
  return MetricSpace(std::move(ids), d);
}

// Nonincreasing positive increments give a concave g with g(k)/k nonincreasing.
std::vector<double> concave_sizes(Rng& rng, int k) {
  std::vector<double> g(k);
  double step = dyadic(rng, 0.5, 4.0, 64.0);
  double total = 0.0;
  for (int i = 0; i < k; ++i) {
    total += step;
    g[i] = total;
    step = static_cast<double>(rng.between(0, static_cast<std::int64_t>(step * 64.0))) / 64.0;
  }
  return g;
}

CostModel random_table(const RandomParams& params, Rng& rng) {
  const int k = params.num_commodities;
  if (k > 12) throw InvalidArgumentError("table costs support at most 12 commodities");
  std::vector<CostModel::TableRow> rows(params.num_points);
  for (auto& row : rows) {
    const std::vector<double> g = concave_sizes(rng, k);
    const double scale = dyadic(rng, 0.5, 4.0, 4.0);
    std::vector<double> w(k);
    for (double& v : w) v = dyadic(rng, 0.0, 0.25, 64.0);
    for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << k); ++bits) {
      const CommoditySet sigma(bits);
      double extra = 0.0;
      for (Commodity e : sigma) extra += w[e];
      const double raw = scale * (g[sigma.size() - 1] + extra);
      row[bits] = std::max(1.0 / 64.0, std::round(raw * 64.0) / 64.0);
    }
  }
  return CostModel::table(k, std::move(rows));
}

CostModel random_cost(const RandomParams& params, Rng& rng) {
  switch (params.cost_kind) {
    case CostModel::Kind::kTable:
      return random_table(params, rng);
    case CostModel::Kind::kSizeBased:
      return CostModel::size_based(concave_sizes(rng, params.num_commodities));
    case CostModel::Kind::kPoly:
      return CostModel::poly(params.num_commodities, dyadic(rng, 0.0, 2.0, 4.0));
  }
  return {};
}

CommoditySet random_demand(const RandomParams& params, Rng& rng) {
  const int k = params.num_commodities;
  const int cap = std::clamp(params.max_set_size, 1, k);
  // Size weighted by binomial counts makes the subset uniform.
  std::vector<double> weight(cap + 1, 0.0);
  double binom = 1.0;
  double total = 0.0;
  for (int s = 1; s <= cap; ++s) {
    binom = binom * (k - s + 1) / s;
    weight[s] = binom;
    total += binom;
  }
  double u = rng.uniform01() * total;
  int size = cap;
  for (int s = 1; s <= cap; ++s) {
    if (u < weight[s]) {
      size = s;
      break;
    }
    u -= weight[s];
  }
  std::vector<Commodity> all(k);
  std::iota(all.begin(), all.end(), 0);
  rng.shuffle(all);
  CommoditySet out;
  for (int s = 0; s < size; ++s) out.insert(all[s]);
  return out;
}

}  // namespace

Instance gen_thm1(int num_commodities, std::uint64_t seed) {
  const int root = exact_sqrt(num_commodities);
  std::vector<double> g(num_commodities);
  for (int k = 1; k <= num_commodities; ++k) g[k - 1] = (k + root - 1) / root;
  Instance inst = adversarial_sequence(num_commodities, CostModel::size_based(g), seed);
  inst.known_opt_upper_bound = 1.0;
  return inst;
}

Instance gen_gx(int num_commodities, double x, std::uint64_t seed) {
  if (!(x >= 0.0 && x <= 2.0)) throw InvalidArgumentError("x must lie in [0, 2]");
  Instance inst = adversarial_sequence(num_commodities,
                                       CostModel::poly(num_commodities, x), seed);
  inst.known_opt_upper_bound = std::pow(static_cast<double>(num_commodities), x / 4.0);
  return inst;
}

Instance gen_random(const RandomParams& params, std::uint64_t seed) {
  if (params.num_points < 1) throw InvalidArgumentError("need at least one point");
  if (params.num_commodities < 1 || params.num_commodities > kMaxCommodities) {
    throw InvalidArgumentError("|S| must lie in 1..64");
  }
  Rng rng(seed);
  Instance inst;
  inst.metric = random_metric(params, rng);
  inst.num_commodities = params.num_commodities;
  constexpr int kAttempts = 200;
  bool accepted = false;
  for (int attempt = 0; attempt < kAttempts && !accepted; ++attempt) {
    inst.cost = random_cost(params, rng);
    accepted = check_subadditivity(inst.cost, inst.metric).empty() &&
               check_condition1(inst.cost, inst.metric).empty();
  }
  if (!accepted) {
    throw InvalidArgumentError(
        "could not draw a valid cost model; try fewer commodities or another kind");
  }
  for (std::size_t r = 0; r < params.num_requests; ++r) {
    const auto point = static_cast<PointIndex>(rng.below(params.num_points));
    inst.add_request(point, random_demand(params, rng));
  }
  return inst;
}

}  // namespace omflp
