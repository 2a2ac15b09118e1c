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

#include "omflp/primal_dual.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <tuple>

#include "json.hpp"
#include "omflp/numeric.hpp"

namespace omflp::pd {
namespace {

struct Candidate {
  double t;
  EventKind kind;
  int rank;  // commodity rank, 0 for kinds 2 and 4
  PointIndex point;
  Event event;
};

int rank_of(const PdOptions& options, Commodity e) {
  if (options.commodity_rank.empty()) return e;
  return options.commodity_rank[e];
}

template <typename Pred>
std::optional<std::size_t> nearest_matching(const DualState& state,
                                            const Instance& inst, PointIndex p,
                                            Pred pred) {
  std::optional<std::size_t> best;
  double best_d = kInfinity;
  for (std::size_t i = 0; i < state.facilities.size(); ++i) {
    const PdFacility& f = state.facilities[i];
    if (f.removed || !pred(f)) continue;
    const double d = inst.metric.distance(p, f.point);
    if (!best || d < best_d ||
        (d == best_d && f.point < state.facilities[*best].point)) {
      best = i;
      best_d = d;
    }
  }
  return best;
}

}  // namespace

const char* to_string(EventKind kind) {
  switch (kind) {
    case EventKind::kConnectSmall:
      return "connect_small";
    case EventKind::kConnectLarge:
      return "connect_large";
    case EventKind::kOpenSmall:
      return "open_small";
    case EventKind::kOpenLarge:
      return "open_large";
  }
  return "unknown";
}

DualState::DualState(const Instance& inst)
    : a(inst.num_requests(), std::vector<double>(inst.num_commodities, 0.0)),
      frozen(inst.num_requests()),
      served(inst.num_requests()),
      connections(inst.num_requests()) {}

double DualState::dual_sum(std::size_t r) const {
  double sum = 0.0;
  for (double value : a[r]) sum += value;
  return sum;
}

std::vector<std::size_t> DualState::small_facilities(Commodity e) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < facilities.size(); ++i) {
    const PdFacility& f = facilities[i];
    if (!f.removed && f.config == CommoditySet::single(e)) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> DualState::large_facilities() const {
  std::vector<std::size_t> out;
  if (a.empty()) return out;
  const CommoditySet universe = CommoditySet::full(static_cast<int>(a[0].size()));
  for (std::size_t i = 0; i < facilities.size(); ++i) {
    if (!facilities[i].removed && facilities[i].config == universe) out.push_back(i);
  }
  return out;
}

std::optional<std::size_t> DualState::nearest_offering(const Instance& inst,
                                                       Commodity e,
                                                       PointIndex p) const {
  return nearest_matching(*this, inst, p, [e](const PdFacility& f) {
    return f.config.contains(e);
  });
}

std::optional<std::size_t> DualState::nearest_large(const Instance& inst,
                                                    PointIndex p) const {
  const CommoditySet universe = inst.universe();
  return nearest_matching(*this, inst, p, [universe](const PdFacility& f) {
    return f.config == universe;
  });
}

double DualState::distance_to_offering(const Instance& inst, Commodity e,
                                       PointIndex p) const {
  auto f = nearest_offering(inst, e, p);
  return f ? inst.metric.distance(p, facilities[*f].point) : kInfinity;
}

double DualState::distance_to_large(const Instance& inst, PointIndex p) const {
  auto f = nearest_large(inst, p);
  return f ? inst.metric.distance(p, facilities[*f].point) : kInfinity;
}

double small_bid_sum(const DualState& state, const Instance& inst,
                     std::size_t r, Commodity e, PointIndex m) {
  double sum = 0.0;
  for (std::size_t j = 0; j < r; ++j) {
    const Request& req = inst.requests[j];
    if (!req.commodities.contains(e)) continue;
    const double reach =
        std::min(state.a[j][e], state.distance_to_offering(inst, e, req.point));
    sum += positive_part(reach - inst.metric.distance(m, req.point));
  }
  return sum;
}

double large_bid_sum(const DualState& state, const Instance& inst,
                     std::size_t r, PointIndex m) {
  double sum = 0.0;
  for (std::size_t j = 0; j < r; ++j) {
    const Request& req = inst.requests[j];
    const double reach = std::min(state.dual_sum(j),
                                  state.distance_to_large(inst, req.point));
    sum += positive_part(reach - inst.metric.distance(m, req.point));
  }
  return sum;
}

double constraint_slack(const DualState& state, const Instance& inst,
                        std::size_t r, int which, std::optional<Commodity> e,
                        std::optional<PointIndex> m) {
  const PointIndex at = inst.requests[r].point;
  switch (which) {
    case 1:
      return state.distance_to_offering(inst, *e, at) - state.a[r][*e];
    case 2:
      return state.distance_to_large(inst, at) - state.dual_sum(r);
    case 3: {
      const double own = positive_part(state.a[r][*e] - inst.metric.distance(*m, at));
      return inst.cost.cost(*m, CommoditySet::single(*e)) - own -
             small_bid_sum(state, inst, r, *e, *m);
    }
    case 4: {
      const double own = positive_part(state.dual_sum(r) - inst.metric.distance(*m, at));
      return inst.cost.cost(*m, inst.universe()) - own -
             large_bid_sum(state, inst, r, *m);
    }
    default:
      return kInfinity;
  }
}

double min_constraint_slack(const DualState& state, const Instance& inst,
                            std::size_t r, CommoditySet active) {
  double slack = kInfinity;
  if (active.empty()) return slack;
  for (Commodity e : active) {
    slack = std::min(slack, constraint_slack(state, inst, r, 1, e, std::nullopt));
    for (PointIndex m = 0; m < inst.metric.size(); ++m) {
      slack = std::min(slack, constraint_slack(state, inst, r, 3, e, m));
    }
  }
  slack = std::min(slack, constraint_slack(state, inst, r, 2, std::nullopt, std::nullopt));
  for (PointIndex m = 0; m < inst.metric.size(); ++m) {
    slack = std::min(slack, constraint_slack(state, inst, r, 4, std::nullopt, m));
  }
  return slack;
}

Event next_event(const DualState& state, const Instance& inst, std::size_t r,
                 CommoditySet unserved, const PdOptions& options) {
  const Request& req = inst.requests[r];
  const PointIndex at = req.point;
  const double rate = static_cast<double>(unserved.size());
  const double dual_sum = state.dual_sum(r);
  std::vector<Candidate> candidates;

  for (Commodity e : unserved) {
    const double a_re = state.a[r][e];
    if (auto f = state.nearest_offering(inst, e, at)) {
      const PointIndex p = state.facilities[*f].point;
      const double t = positive_part(inst.metric.distance(at, p) - a_re);
      candidates.push_back({t, EventKind::kConnectSmall, rank_of(options, e), p,
                            {EventKind::kConnectSmall, e, p, t, *f}});
    }
    for (PointIndex m = 0; m < inst.metric.size(); ++m) {
      const double f_small = inst.cost.cost(m, CommoditySet::single(e));
      const double t = positive_part(inst.metric.distance(m, at) + f_small -
                                     small_bid_sum(state, inst, r, e, m) - a_re);
      candidates.push_back({t, EventKind::kOpenSmall, rank_of(options, e), m,
                            {EventKind::kOpenSmall, e, m, t, std::nullopt}});
    }
  }
  if (auto f = state.nearest_large(inst, at)) {
    const PointIndex p = state.facilities[*f].point;
    const double t = positive_part(inst.metric.distance(at, p) - dual_sum) / rate;
    candidates.push_back({t, EventKind::kConnectLarge, 0, p,
                          {EventKind::kConnectLarge, std::nullopt, p, t, *f}});
  }
  for (PointIndex m = 0; m < inst.metric.size(); ++m) {
    const double f_large = inst.cost.cost(m, inst.universe());
    const double t = positive_part(inst.metric.distance(m, at) + f_large -
                                   large_bid_sum(state, inst, r, m) - dual_sum) /
                     rate;
    candidates.push_back({t, EventKind::kOpenLarge, 0, m,
                          {EventKind::kOpenLarge, std::nullopt, m, t, std::nullopt}});
  }

  double best_t = kInfinity;
  for (const Candidate& c : candidates) best_t = std::min(best_t, c.t);
  const Candidate* chosen = nullptr;
  for (const Candidate& c : candidates) {
    if (c.t > best_t + kTightEps) continue;
    if (chosen == nullptr ||
        std::tie(c.kind, c.rank, c.point) <
            std::tie(chosen->kind, chosen->rank, chosen->point)) {
      chosen = &c;
    }
  }
  Event ev = chosen->event;
  ev.raise = best_t;
  return ev;
}

void apply_event(DualState& state, const Instance& inst, std::size_t r,
                 const Event& ev, const PdOptions& options) {
  const Request& req = inst.requests[r];
  const CommoditySet active = req.commodities - state.frozen[r];
  for (Commodity e : active) state.a[r][e] += ev.raise;
  state.total_dual += ev.raise * active.size();

  double min_slack = std::numeric_limits<double>::quiet_NaN();
  if (options.audit) min_slack = min_constraint_slack(state, inst, r, active);

  CommoditySet frozen_now;
  switch (ev.kind) {
    case EventKind::kConnectSmall:
      frozen_now = CommoditySet::single(*ev.commodity);
      state.connections[r].push_back({*ev.facility, frozen_now});
      break;
    case EventKind::kOpenSmall: {
      frozen_now = CommoditySet::single(*ev.commodity);
      state.facilities.push_back({*ev.point, frozen_now, true, false, r});
      state.connections[r].push_back({state.facilities.size() - 1, frozen_now});
      break;
    }
    case EventKind::kConnectLarge:
    case EventKind::kOpenLarge: {
      frozen_now = active;
      for (PdFacility& f : state.facilities) {
        if (f.temporary && !f.removed && f.opened_by == r) f.removed = true;
      }
      std::size_t target = 0;
      if (ev.kind == EventKind::kOpenLarge) {
        state.facilities.push_back({*ev.point, inst.universe(), false, false, r});
        target = state.facilities.size() - 1;
      } else {
        target = *ev.facility;
      }
      state.connections[r].assign(1, {target, req.commodities});
      break;
    }
  }
  state.frozen[r] = state.frozen[r] | frozen_now;
  state.served[r] = state.served[r] | frozen_now;

  if (options.audit) {
    const CommoditySet still_active = req.commodities - state.frozen[r];
    min_slack = std::min(min_slack, min_constraint_slack(state, inst, r, still_active));
  }
  state.trace.push_back({r, ev.kind, ev.commodity, ev.point, ev.raise,
                         state.total_dual, frozen_now, min_slack});
}

void finish_request(DualState& state, std::size_t r) {
  for (PdFacility& f : state.facilities) {
    if (f.opened_by == r && !f.removed) f.temporary = false;
  }
}

void serve_request(DualState& state, const Instance& inst, std::size_t r,
                   const PdOptions& options) {
  const CommoditySet demand = inst.requests[r].commodities;
  while (!(demand - state.served[r]).empty()) {
    const Event ev = next_event(state, inst, r, demand - state.served[r], options);
    apply_event(state, inst, r, ev, options);
  }
  finish_request(state, r);
}

PdResult run_pd(const Instance& inst, const PdOptions& options) {
  DualState state(inst);
  for (std::size_t r = 0; r < inst.num_requests(); ++r) {
    serve_request(state, inst, r, options);
  }

  Solution sol;
  std::vector<FacilityId> ids(state.facilities.size(), 0);
  for (std::size_t i = 0; i < state.facilities.size(); ++i) {
    const PdFacility& f = state.facilities[i];
    if (!f.removed) ids[i] = sol.add_facility(inst, f.point, f.config);
  }
  for (std::size_t r = 0; r < inst.num_requests(); ++r) {
    Assignment asg{r, {}};
    for (const auto& [facility, commodities] : state.connections[r]) {
      asg.connections.push_back({ids[facility], commodities});
    }
    sol.assignments.push_back(std::move(asg));
  }
  return {std::move(sol), std::move(state)};
}

std::string serialize_trace(const Instance& inst, const DualState& state) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const TraceRecord& rec : state.trace) {
    nlohmann::ordered_json item;
    item["request"] = rec.request;
    item["kind"] = static_cast<int>(rec.kind);
    item["event"] = to_string(rec.kind);
    item["commodity"] = rec.commodity ? nlohmann::ordered_json(*rec.commodity)
                                      : nlohmann::ordered_json(nullptr);
    item["point"] = rec.point ? nlohmann::ordered_json(inst.metric.id(*rec.point))
                              : nlohmann::ordered_json(nullptr);
    item["raise"] = rec.raise;
    item["dual_sum"] = rec.dual_sum;
    if (!std::isnan(rec.min_slack)) item["min_slack"] = rec.min_slack;
    out.push_back(std::move(item));
  }
  return out.dump(2) + "\n";
}

}  // namespace omflp::pd
