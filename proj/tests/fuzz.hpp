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

#ifndef OMFLP_TESTS_FUZZ_HPP_
#define OMFLP_TESTS_FUZZ_HPP_

#include <cstdint>

#include "omflp/generators.hpp"
#include "omflp/random.hpp"

namespace omflp::testing {

// Instance shape drawn from the seed itself: up to the given sizes, every
// metric and cost kind.
inline RandomParams fuzz_params(std::uint64_t seed, std::size_t max_points,
                                int max_commodities, std::size_t max_requests) {
  Rng rng(seed, 0xf00d);
  RandomParams p;
  p.num_points = static_cast<std::size_t>(rng.between(1, static_cast<std::int64_t>(max_points)));
  p.num_commodities = static_cast<int>(rng.between(1, max_commodities));
  p.num_requests =
      static_cast<std::size_t>(rng.between(1, static_cast<std::int64_t>(max_requests)));
  p.metric = rng.bernoulli(0.5) ? MetricKind::kLine : MetricKind::kMatrix;
  switch (rng.below(3)) {
    case 0:
      p.cost_kind = CostModel::Kind::kTable;
      break;
    case 1:
      p.cost_kind = CostModel::Kind::kSizeBased;
      break;
    default:
      p.cost_kind = CostModel::Kind::kPoly;
  }
  p.max_set_size = static_cast<int>(rng.between(1, p.num_commodities));
  return p;
}

inline Instance fuzz_instance(std::uint64_t seed, std::size_t max_points = 6,
                              int max_commodities = 4, std::size_t max_requests = 12) {
  return gen_random(fuzz_params(seed, max_points, max_commodities, max_requests), seed);
}

// Dyadic-cost variant (no poly kind) so that sums are exact.
inline Instance exact_fuzz_instance(std::uint64_t seed, std::size_t max_points = 4,
                                    int max_commodities = 4,
                                    std::size_t max_requests = 8) {
  RandomParams p = fuzz_params(seed, max_points, max_commodities, max_requests);
  if (p.cost_kind == CostModel::Kind::kPoly) p.cost_kind = CostModel::Kind::kTable;
  return gen_random(p, seed);
}

}  // namespace omflp::testing

#endif  // OMFLP_TESTS_FUZZ_HPP_
