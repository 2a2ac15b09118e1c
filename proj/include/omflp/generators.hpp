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

#ifndef OMFLP_GENERATORS_HPP_
#define OMFLP_GENERATORS_HPP_

#include <cstddef>
#include <cstdint>

#include "omflp/instance.hpp"

namespace omflp {

// Single point, g(k) = ceil(k / sqrt|S|), and one single-commodity request
// per element of a random S' of size sqrt|S|, in random order. The optimum
// is at most 1.
Instance gen_thm1(int num_commodities, std::uint64_t seed);

// Same request sequence with cost k^(x/2); the optimum is at most |S|^(x/4).
Instance gen_gx(int num_commodities, double x, std::uint64_t seed);

enum class MetricKind { kLine, kMatrix };

struct RandomParams {
  std::size_t num_points = 3;
  int num_commodities = 3;
  std::size_t num_requests = 6;
  MetricKind metric = MetricKind::kLine;
  CostModel::Kind cost_kind = CostModel::Kind::kTable;
  int max_set_size = 3;

  // Small enough for the exact oracle with default limits.
  static RandomParams oracle_preset() { return {}; }
};

// Seeded fuzz instance. Distances and table or size-based costs are dyadic
// rationals, so sums are exact in binary floating point. Cost models are
// redrawn until they are subadditive and satisfy the per-commodity
// condition; throws InvalidArgumentError if that keeps failing.
Instance gen_random(const RandomParams& params, std::uint64_t seed);

}  // namespace omflp

#endif  // OMFLP_GENERATORS_HPP_
