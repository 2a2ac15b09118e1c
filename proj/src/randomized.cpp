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

#include "omflp/randomized.hpp"

#include <algorithm>
#include <cmath>

#include "json.hpp"
#include "omflp/errors.hpp"

namespace omflp::rnd {
namespace {

template <typename Pred>
std::optional<FacilityId> nearest_matching(const Solution& sol,
                                           const Instance& inst, PointIndex p,
                                           Pred pred) {
  std::optional<FacilityId> best;
  double best_d = kInfinity;
  for (const Facility& f : sol.facilities) {
    if (!pred(f)) continue;
    const double d = inst.metric.distance(p, f.point);
    if (!best || d < best_d ||
        (d == best_d && f.point < sol.facilities[*best].point)) {
      best = f.id;
      best_d = d;
    }
  }
  return best;
}

double distance_to(const Solution& sol, const Instance& inst, PointIndex p,
                   std::optional<FacilityId> f) {
  return f ? inst.metric.distance(p, sol.facilities[*f].point) : kInfinity;
}

// min_i C_i + d(C_i, p), with the class index realizing it.
std::pair<double, std::size_t> cheapest_class(const ClassTable& table,
                                              PointIndex p) {
  double best = kInfinity;
  std::size_t arg = 0;
  for (std::size_t i = 0; i < table.values.size(); ++i) {
    const double v = table.values[i] + table.dist[i][p];
    if (v < best) {
      best = v;
      arg = i;
    }
  }
  return {best, arg};
}

void add_connection(std::vector<Connection>& conns, FacilityId f, Commodity e) {
  for (Connection& c : conns) {
    if (c.facility == f) {
      c.commodities.insert(e);
      return;
    }
  }
  conns.push_back({f, CommoditySet::single(e)});
}

}  // namespace

double power_of_two_floor(double value) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw InvalidArgumentError("class values need a positive finite cost");
  }
  int exp = 0;
  std::frexp(value, &exp);  // value = f * 2^exp, f in [0.5, 1)
  return std::ldexp(1.0, exp - 1);
}

ClassTable build_class_table(const Instance& inst, CommoditySet config,
                             ClassMode mode) {
  ClassTable table;
  table.config = config;
  const std::size_t n_points = inst.metric.size();
  std::vector<double> floors(n_points);
  for (PointIndex m = 0; m < n_points; ++m) {
    floors[m] = power_of_two_floor(inst.cost.cost(m, config));
  }
  table.values = floors;
  std::sort(table.values.begin(), table.values.end());
  table.values.erase(std::unique(table.values.begin(), table.values.end()),
                     table.values.end());
  table.point_class.resize(n_points);
  for (PointIndex m = 0; m < n_points; ++m) {
    table.point_class[m] =
        std::lower_bound(table.values.begin(), table.values.end(), floors[m]) -
        table.values.begin();
  }

  const std::size_t levels = table.values.size();
  table.dist.assign(levels, std::vector<double>(n_points, kInfinity));
  table.nearest.assign(levels, std::vector<PointIndex>(n_points, 0));
  for (std::size_t i = 0; i < levels; ++i) {
    for (PointIndex m = 0; m < n_points; ++m) {
      for (PointIndex q = 0; q < n_points; ++q) {
        const std::size_t cls = table.point_class[q];
        const bool member = mode == ClassMode::kCumulative ? cls <= i : cls == i;
        if (!member) continue;
        const double d = inst.metric.distance(m, q);
        if (d < table.dist[i][m]) {
          table.dist[i][m] = d;
          table.nearest[i][m] = q;
        }
      }
    }
  }
  return table;
}

ClassIndex build_classes(const Instance& inst, ClassMode mode) {
  ClassIndex index;
  index.mode = mode;
  if (inst.metric.size() == 0 || inst.num_commodities == 0) return index;
  for (Commodity e = 0; e < inst.num_commodities; ++e) {
    index.small.push_back(build_class_table(inst, CommoditySet::single(e), mode));
  }
  index.large = build_class_table(inst, inst.universe(), mode);
  return index;
}

std::optional<FacilityId> RandState::nearest_offering(const Instance& inst,
                                                      Commodity e,
                                                      PointIndex p) const {
  return nearest_matching(solution, inst, p, [e](const Facility& f) {
    return f.config.contains(e);
  });
}

std::optional<FacilityId> RandState::nearest_large(const Instance& inst,
                                                   PointIndex p) const {
  const CommoditySet universe = inst.universe();
  return nearest_matching(solution, inst, p, [universe](const Facility& f) {
    return f.config == universe;
  });
}

bool RandState::covered_at(PointIndex p, CommoditySet config) const {
  return std::any_of(solution.facilities.begin(), solution.facilities.end(),
                     [&](const Facility& f) {
                       return f.point == p && config.is_subset_of(f.config);
                     });
}

Budgets compute_budgets(const RandState& state, const ClassIndex& classes,
                        const Instance& inst, std::size_t r) {
  const Request& req = inst.requests[r];
  Budgets b;
  b.x_e.assign(inst.num_commodities, 0.0);
  for (Commodity e : req.commodities) {
    const double existing = distance_to(
        state.solution, inst, req.point, state.nearest_offering(inst, e, req.point));
    b.x_e[e] = std::min(existing, cheapest_class(classes.small[e], req.point).first);
    b.x += b.x_e[e];
  }
  const double existing = distance_to(state.solution, inst, req.point,
                                      state.nearest_large(inst, req.point));
  b.z = std::min(existing, cheapest_class(classes.large, req.point).first);
  return b;
}

std::vector<double> class_distances(const ClassTable& table, ClassMode mode,
                                    PointIndex p, double d0) {
  std::vector<double> d(table.values.size() + 1);
  d[0] = d0;
  for (std::size_t i = 0; i < table.values.size(); ++i) {
    d[i + 1] = mode == ClassMode::kCumulative ? std::min(table.dist[i][p], d0)
                                              : table.dist[i][p];
  }
  return d;
}

void step_rand(RandState& state, const ClassIndex& classes,
               const Instance& inst, std::size_t r, Rng& rng) {
  const Request& req = inst.requests[r];
  const PointIndex at = req.point;
  RequestTrace rec;
  rec.request = r;
  rec.budgets = compute_budgets(state, classes, inst, r);
  const Budgets& b = rec.budgets;
  const double d0 = std::min(b.z, b.x);

  std::vector<std::vector<double>> small_d(inst.num_commodities);
  for (Commodity e : req.commodities) {
    small_d[e] = class_distances(classes.small[e], classes.mode, at, d0);
  }
  const std::vector<double> large_d =
      class_distances(classes.large, classes.mode, at, d0);

  auto note_telescoping = [&](const std::vector<double>& d) {
    double sum = 0.0;
    for (std::size_t i = 1; i < d.size(); ++i) sum += d[i - 1] - d[i];
    state.stats.telescoping_error = std::max(
        state.stats.telescoping_error, std::abs(sum - (d.front() - d.back())));
  };
  double small_charge = 0.0;
  double large_charge = 0.0;

  auto flip = [&](const ClassTable& table, std::size_t i, double p_raw) {
    Coin coin{table.config, i + 1, p_raw, std::clamp(p_raw, 0.0, 1.0), false};
    if (coin.p != p_raw) ++state.stats.clamped;
    ++state.stats.coins;
    coin.outcome = rng.uniform01() < coin.p;
    if (coin.outcome) {
      const PointIndex where = table.nearest[i][at];
      if (!state.covered_at(where, table.config)) {
        rec.opened.push_back(state.solution.add_facility(inst, where, table.config));
      }
    }
    rec.coins.push_back(coin);
  };

  const std::size_t levels =
      std::max(classes.large.values.size(),
               [&] {
                 std::size_t most = 0;
                 for (Commodity e : req.commodities) {
                   most = std::max(most, classes.small[e].values.size());
                 }
                 return most;
               }());
  for (std::size_t i = 0; i < levels; ++i) {
    for (Commodity e : req.commodities) {
      const ClassTable& table = classes.small[e];
      if (i >= table.values.size()) continue;
      const double share = b.x > 0.0 ? b.x_e[e] / b.x : 0.0;
      const double p_raw =
          (small_d[e][i] - small_d[e][i + 1]) / table.values[i] * share;
      small_charge += p_raw * table.values[i];
      flip(table, i, p_raw);
    }
    if (i < classes.large.values.size()) {
      const double p_raw = (large_d[i] - large_d[i + 1]) / classes.large.values[i];
      large_charge += p_raw * classes.large.values[i];
      flip(classes.large, i, p_raw);
    }
  }

  for (Commodity e : req.commodities) note_telescoping(small_d[e]);
  note_telescoping(large_d);
  state.stats.large_charge_error =
      std::max(state.stats.large_charge_error,
               std::abs(large_charge - (large_d.front() - large_d.back())));
  state.stats.small_charge_excess =
      std::max(state.stats.small_charge_excess, small_charge - d0);

  for (Commodity e : req.commodities) {
    if (state.nearest_offering(inst, e, at)) continue;
    const ClassTable& table = classes.small[e];
    const std::size_t i = cheapest_class(table, at).second;
    rec.fallback.push_back(
        state.solution.add_facility(inst, table.nearest[i][at], table.config));
  }

  // Route (a): one large facility; route (b): per-commodity nearest.
  const auto large = state.nearest_large(inst, at);
  const double large_cost = distance_to(state.solution, inst, at, large);
  std::vector<Connection> per_commodity;
  for (Commodity e : req.commodities) {
    add_connection(per_commodity, *state.nearest_offering(inst, e, at), e);
  }
  double small_cost = 0.0;
  for (const Connection& c : per_commodity) {
    small_cost += distance_to(state.solution, inst, at, c.facility);
  }
  if (large && large_cost <= small_cost) {
    rec.connections = {{*large, req.commodities}};
  } else {
    rec.connections = std::move(per_commodity);
  }
  state.solution.assignments.push_back({r, rec.connections});
  if (state.record_trace) state.trace.push_back(std::move(rec));
}

RandResult run_rand(const Instance& inst, std::uint64_t seed,
                    const RandOptions& options) {
  RandState state;
  state.record_trace = options.record_trace;
  if (inst.num_requests() > 0) {
    const ClassIndex classes = build_classes(inst, options.mode);
    for (std::size_t r = 0; r < inst.num_requests(); ++r) {
      Rng rng(seed, inst.requests[r].arrival_index);
      step_rand(state, classes, inst, r, rng);
    }
  }
  return {std::move(state.solution), state.stats, std::move(state.trace)};
}

std::string serialize_rand_trace(const Instance& inst,
                                 const std::vector<RequestTrace>& trace) {
  using nlohmann::ordered_json;
  auto config_json = [&](CommoditySet c) {
    return c == inst.universe() && inst.num_commodities > 1
               ? ordered_json("S")
               : ordered_json(c.to_vector());
  };
  ordered_json out = ordered_json::array();
  for (const RequestTrace& rec : trace) {
    ordered_json item;
    item["request"] = rec.request;
    ordered_json x_map = ordered_json::object();
    for (Commodity e : inst.requests[rec.request].commodities) {
      x_map[std::to_string(e)] = rec.budgets.x_e[e];
    }
    item["X_map"] = std::move(x_map);
    item["X"] = rec.budgets.x;
    item["Z"] = rec.budgets.z;
    ordered_json coins = ordered_json::array();
    for (const Coin& c : rec.coins) {
      coins.push_back({{"config", config_json(c.config)},
                       {"class", c.class_index},
                       {"p", c.p},
                       {"outcome", c.outcome}});
    }
    item["coins"] = std::move(coins);
    item["opened"] = rec.opened;
    item["fallback"] = rec.fallback;
    ordered_json conns = ordered_json::array();
    for (const Connection& c : rec.connections) {
      conns.push_back({{"facility", c.facility},
                       {"commodities", c.commodities.to_vector()}});
    }
    item["connections"] = std::move(conns);
    out.push_back(std::move(item));
  }
  return out.dump(2) + "\n";
}

}  // namespace omflp::rnd
