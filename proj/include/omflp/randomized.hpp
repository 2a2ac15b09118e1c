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

#ifndef OMFLP_RANDOMIZED_HPP_
#define OMFLP_RANDOMIZED_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "omflp/commodity_set.hpp"
#include "omflp/instance.hpp"
#include "omflp/numeric.hpp"
#include "omflp/random.hpp"
#include "omflp/solution.hpp"

// Randomized class-based online algorithm. Facility costs of each
// configuration tau ({e} or S) are rounded down to powers of two, giving
// classes C_1 < C_2 < ...; an arriving request flips one coin per class with
//   Pr[r,e,i] = (d(C_{i-1},r) - d(C_i,r)) / C_i * X(r,e)/X(r)
//   Pr[r,S,i] = (d(C_{i-1},r) - d(C_i,r)) / C_i
// where d(C_0, r) = min{Z(r), X(r)}.
namespace omflp::rnd {

enum class ClassMode {
  // d(C_i, m): nearest point of class <= i, capped at d(C_0, r) when used
  // for a request, so successive differences are nonnegative.
  kCumulative,
  // d(C_i, m): nearest point of class exactly i, uncapped.
  kLiteral,
};

struct ClassTable {
  CommoditySet config;
  // Distinct power-of-two floors, ascending.
  std::vector<double> values;
  // Per point: index into `values`.
  std::vector<std::size_t> point_class;
  // [i][m]: distance from m to the nearest point of class i (per mode) and
  // that point. Ties go to the lower point index.
  std::vector<std::vector<double>> dist;
  std::vector<std::vector<PointIndex>> nearest;
};

struct ClassIndex {
  ClassMode mode = ClassMode::kCumulative;
  std::vector<ClassTable> small;  // indexed by commodity
  ClassTable large;
};

// Largest power of two <= value (value > 0).
double power_of_two_floor(double value);

ClassTable build_class_table(const Instance& inst, CommoditySet config,
                             ClassMode mode);
ClassIndex build_classes(const Instance& inst,
                         ClassMode mode = ClassMode::kCumulative);

struct Budgets {
  std::vector<double> x_e;  // per commodity, 0 outside s_r
  double x = 0.0;
  double z = 0.0;
};

struct Coin {
  CommoditySet config;
  std::size_t class_index = 0;  // 1-based
  double p_raw = 0.0;
  double p = 0.0;
  bool outcome = false;
};

struct RequestTrace {
  std::size_t request = 0;
  Budgets budgets;
  std::vector<Coin> coins;
  std::vector<FacilityId> opened;
  std::vector<FacilityId> fallback;
  std::vector<Connection> connections;
};

struct RandStats {
  std::size_t coins = 0;
  std::size_t clamped = 0;
  // Largest |sum_i (d_{i-1} - d_i) - (d_0 - d_last)| over requests and
  // configurations.
  double telescoping_error = 0.0;
  // Largest |sum_i p_raw C_i - (d_0 - d_last)| for tau = S.
  double large_charge_error = 0.0;
  // Largest sum_e sum_i p_raw C_i - d_0 (should stay <= 0).
  double small_charge_excess = -kInfinity;
};

struct RandState {
  Solution solution;
  RandStats stats;
  std::vector<RequestTrace> trace;
  bool record_trace = false;

  std::optional<FacilityId> nearest_offering(const Instance& inst, Commodity e,
                                             PointIndex p) const;
  std::optional<FacilityId> nearest_large(const Instance& inst,
                                          PointIndex p) const;
  // True if a facility at p already offers a superset of config.
  bool covered_at(PointIndex p, CommoditySet config) const;
};

Budgets compute_budgets(const RandState& state, const ClassIndex& classes,
                        const Instance& inst, std::size_t r);

// d(C_i, r) for i = 0..L under the given mode, with d_0 = d0.
std::vector<double> class_distances(const ClassTable& table, ClassMode mode,
                                    PointIndex p, double d0);

// Processes request r: coins, fallback openings, connection.
void step_rand(RandState& state, const ClassIndex& classes,
               const Instance& inst, std::size_t r, Rng& rng);

struct RandOptions {
  ClassMode mode = ClassMode::kCumulative;
  bool record_trace = false;
};

struct RandResult {
  Solution solution;
  RandStats stats;
  std::vector<RequestTrace> trace;
};

// Request r uses the stream Rng(seed, arrival_index).
RandResult run_rand(const Instance& inst, std::uint64_t seed,
                    const RandOptions& options = {});

std::string serialize_rand_trace(const Instance& inst,
                                 const std::vector<RequestTrace>& trace);

}  // namespace omflp::rnd

#endif  // OMFLP_RANDOMIZED_HPP_
