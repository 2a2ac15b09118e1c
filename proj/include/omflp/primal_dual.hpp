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

#ifndef OMFLP_PRIMAL_DUAL_HPP_
#define OMFLP_PRIMAL_DUAL_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "omflp/commodity_set.hpp"
#include "omflp/instance.hpp"
#include "omflp/solution.hpp"

// Deterministic primal-dual online algorithm. Each arriving request raises
// the duals a_re of its unserved commodities at unit rate until one of four
// constraints becomes tight:
//
//   (1) a_re <= d(F(e), r)
//   (2) sum_{e in s_r} a_re <= d(F^, r)
//   (3) (a_re - d(m,r))_+ + Phi(e, m) <= f_m^{e}
//   (4) (sum_{e in s_r} a_re - d(m,r))_+ + Psi(m) <= f_m^S
//
// where F(e) are the open facilities offering e, F^ those offering all of S,
//   Phi(e, m) = sum_{j < r, e in s_j} (min{a_je, d(F(e), j)} - d(m, j))_+,
//   Psi(m)    = sum_{j < r} (min{sum_{e in s_j} a_je, d(F^, j)} - d(m, j))_+.
//
// Tight (1)/(3) serve one commodity (by an existing facility / a temporary
// small facility at m); tight (2)/(4) serve the whole request by one large
// facility and discard this request's temporary facilities.
namespace omflp::pd {

enum class EventKind {
  kConnectSmall = 1,
  kConnectLarge = 2,
  kOpenSmall = 3,
  kOpenLarge = 4,
};

const char* to_string(EventKind kind);

struct Event {
  EventKind kind = EventKind::kConnectSmall;
  std::optional<Commodity> commodity;  // kinds 1 and 3
  // Facility point for kinds 1 and 2, opening point for kinds 3 and 4.
  std::optional<PointIndex> point;
  double raise = 0.0;
  // Index into DualState::facilities of the facility connected to (1, 2).
  std::optional<std::size_t> facility;
};

struct PdFacility {
  PointIndex point = 0;
  CommoditySet config;
  bool temporary = false;
  bool removed = false;
  std::size_t opened_by = 0;
};

struct TraceRecord {
  std::size_t request = 0;
  EventKind kind = EventKind::kConnectSmall;
  std::optional<Commodity> commodity;
  std::optional<PointIndex> point;
  double raise = 0.0;
  // Sum of all duals after this event.
  double dual_sum = 0.0;
  // Duals frozen by this event.
  CommoditySet frozen;
  // Minimum constraint slack observed around this event; only filled when
  // auditing (NaN otherwise).
  double min_slack = 0.0;
};

struct PdOptions {
  // Evaluate all constraints before and after every structural change and
  // record the minimum slack in the trace.
  bool audit = false;
  // Tie-break priority among commodities: rank[e] smaller wins. Empty means
  // by index.
  std::vector<int> commodity_rank;
};

struct DualState {
  explicit DualState(const Instance& inst);

  // a[r][e]; zero for e outside s_r.
  std::vector<std::vector<double>> a;
  std::vector<CommoditySet> frozen;
  std::vector<CommoditySet> served;
  // Every facility ever opened, in opening order; removed temporaries stay
  // in the pool flagged `removed`.
  std::vector<PdFacility> facilities;
  // Per request: (facility index, commodities served by it).
  std::vector<std::vector<std::pair<std::size_t, CommoditySet>>> connections;
  std::vector<TraceRecord> trace;
  double total_dual = 0.0;

  double dual_sum(std::size_t r) const;

  // Live facilities offering e (small ones for e and large ones) / all of S.
  std::vector<std::size_t> small_facilities(Commodity e) const;
  std::vector<std::size_t> large_facilities() const;

  // Nearest live facility offering e / offering all of S, with distance;
  // ties go to the lower point index, then the earlier facility.
  std::optional<std::size_t> nearest_offering(const Instance& inst,
                                              Commodity e, PointIndex p) const;
  std::optional<std::size_t> nearest_large(const Instance& inst,
                                           PointIndex p) const;
  // d(F(e), p) and d(F^, p); +inf for empty sets.
  double distance_to_offering(const Instance& inst, Commodity e,
                              PointIndex p) const;
  double distance_to_large(const Instance& inst, PointIndex p) const;
};

// Earlier-request bid sums of constraints (3) and (4) for request r.
double small_bid_sum(const DualState& state, const Instance& inst,
                     std::size_t r, Commodity e, PointIndex m);
double large_bid_sum(const DualState& state, const Instance& inst,
                     std::size_t r, PointIndex m);

// RHS - LHS of constraint `which` (1..4) for request r at the current state.
// Constraints (1)/(2) return +inf when the relevant facility set is empty.
double constraint_slack(const DualState& state, const Instance& inst,
                        std::size_t r, int which, std::optional<Commodity> e,
                        std::optional<PointIndex> m);

// Minimum slack over (1),(3) for e in `active` and all m, and (2),(4) for all
// m when `active` is nonempty.
double min_constraint_slack(const DualState& state, const Instance& inst,
                            std::size_t r, CommoditySet active);

// The next constraint to become tight when raising the duals of `unserved`.
// Ties (within kTightEps) go to kind 1 < 2 < 3 < 4, then commodity rank,
// then point index.
Event next_event(const DualState& state, const Instance& inst, std::size_t r,
                 CommoditySet unserved, const PdOptions& options = {});

// Raises the active duals of r by ev.raise and applies the event.
void apply_event(DualState& state, const Instance& inst, std::size_t r,
                 const Event& ev, const PdOptions& options = {});

// Makes the temporary facilities opened while serving r permanent.
void finish_request(DualState& state, std::size_t r);

// Serves r completely: loops next_event / apply_event, then finishes.
void serve_request(DualState& state, const Instance& inst, std::size_t r,
                   const PdOptions& options = {});

struct PdResult {
  Solution solution;
  DualState state;
};

PdResult run_pd(const Instance& inst, const PdOptions& options = {});

// Event records as a JSON array: request, kind, commodity, point, raise,
// dual_sum (and min_slack when audited).
std::string serialize_trace(const Instance& inst, const DualState& state);

}  // namespace omflp::pd

#endif  // OMFLP_PRIMAL_DUAL_HPP_
