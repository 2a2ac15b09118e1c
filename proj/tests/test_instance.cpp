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

#include <cmath>
#include <string>
#include <vector>

#include "doctest.h"
#include "fuzz.hpp"
#include "omflp/cost_model.hpp"
#include "omflp/errors.hpp"
#include "omflp/generators.hpp"
#include "omflp/instance.hpp"
#include "omflp/metric.hpp"

using namespace omflp;

namespace {

Instance tiny_instance() {
  Instance inst;
  const double coords[] = {0.0};
  inst.metric = MetricSpace::line(coords);
  inst.cost = CostModel::size_based({5.0});
  inst.num_commodities = 1;
  inst.add_request(0, CommoditySet{0});
  return inst;
}

}  // namespace

TEST_CASE("validate_metric accepts trivial metrics") {
  CHECK(validate_metric({{0.0}}).ok());
  CHECK(validate_metric({{0.0, 1.0}, {1.0, 0.0}}).ok());
}

TEST_CASE("validate_metric names the broken triangle") {
  const MetricReport report = validate_metric({{0, 1, 3}, {1, 0, 1}, {3, 1, 0}});
  REQUIRE_FALSE(report.ok());
  bool found = false;
  for (const MetricViolation& v : report.violations) {
    if (v.axiom == MetricViolation::Axiom::kTriangle && v.i == 0 && v.j == 1 && v.k == 2) {
      found = true;
      CHECK(v.excess == doctest::Approx(1.0));
    }
  }
  CHECK(found);
}

TEST_CASE("validate_metric reports asymmetry, negatives and diagonal") {
  const MetricReport report = validate_metric({{1, 2}, {3, 0}});
  bool diag = false;
  bool asym = false;
  for (const MetricViolation& v : report.violations) {
    diag |= v.axiom == MetricViolation::Axiom::kNonzeroDiagonal;
    asym |= v.axiom == MetricViolation::Axiom::kAsymmetric;
  }
  CHECK(diag);
  CHECK(asym);
  CHECK_FALSE(validate_metric({{0, -1}, {-1, 0}}).ok());
}

TEST_CASE("validate_metric rejects non-square input") {
  CHECK_THROWS_AS(validate_metric({{0, 1}}), StructuralError);
}

TEST_CASE("build_line_metric uses absolute differences") {
  const double one[] = {0.0};
  CHECK(build_line_metric(one).matrix() == DistanceMatrix{{0.0}});

  const double three[] = {0.0, 2.0, 5.0};
  const MetricSpace m = build_line_metric(three);
  CHECK(m.distance(0, 2) == 5.0);
  CHECK(m.distance(0, 1) == 2.0);
  CHECK(m.distance(1, 2) == 3.0);
  CHECK(validate_metric(m.matrix()).ok());

  const double twin[] = {1.0, 1.0};
  const MetricSpace z = build_line_metric(twin);
  CHECK(z.size() == 2);
  CHECK(z.distance(0, 1) == 0.0);
}

TEST_CASE("facility_cost per kind") {
  const CostModel poly1 = CostModel::poly(16, 1.0);
  CommoditySet sixteen = CommoditySet::full(16);
  CHECK(facility_cost(poly1, 0, sixteen) == doctest::Approx(4.0));

  std::vector<double> g(16);
  for (int k = 1; k <= 16; ++k) g[k - 1] = std::ceil(k / 4.0);
  const CostModel thm1 = CostModel::size_based(g);
  CHECK(facility_cost(thm1, 0, CommoditySet{0, 1, 2, 3, 4}) == 2.0);

  const CostModel flat = CostModel::poly(5, 0.0);
  CHECK(facility_cost(flat, 0, CommoditySet{3}) == 1.0);
  CHECK(facility_cost(flat, 0, CommoditySet::full(5)) == 1.0);
}

TEST_CASE("facility_cost errors") {
  std::vector<CostModel::TableRow> rows(1);
  rows[0][0b01] = 1.0;
  const CostModel table = CostModel::table(2, rows);
  CHECK_THROWS_AS(facility_cost(table, 0, CommoditySet{1}), MissingCostError);
  CHECK_THROWS_AS(facility_cost(table, 0, CommoditySet{}), InvalidArgumentError);
  CHECK_THROWS_AS(CostModel::poly(2, 2.5), InvalidArgumentError);
}

TEST_CASE("check_condition1 examples") {
  const double coords[] = {0.0};
  const MetricSpace one = build_line_metric(coords);
  CHECK(check_condition1(CostModel::poly(4, 1.0), one).empty());

  std::vector<CostModel::TableRow> rows(1);
  rows[0][0b01] = 1.0;
  rows[0][0b10] = 1.0;
  rows[0][0b11] = 4.0;
  const auto bad = check_condition1(CostModel::table(2, rows), one);
  REQUIRE_FALSE(bad.empty());
  bool saw_a = false;
  for (const auto& v : bad) saw_a |= v.config == CommoditySet{0};
  CHECK(saw_a);

  // g(k) = ceil(k/2) over |S| = 4.
  CHECK(check_condition1(CostModel::size_based({1, 1, 2, 2}), one).empty());
}

TEST_CASE("check_subadditivity examples") {
  const double coords[] = {0.0};
  const MetricSpace one = build_line_metric(coords);
  for (double x : {0.0, 0.5, 1.0, 1.5, 2.0}) {
    CHECK(check_subadditivity(CostModel::poly(6, x), one).empty());
  }
  std::vector<CostModel::TableRow> rows(1);
  rows[0][0b01] = 1.0;
  rows[0][0b10] = 1.0;
  rows[0][0b11] = 3.0;
  CHECK_FALSE(check_subadditivity(CostModel::table(2, rows), one).empty());
  CHECK(check_subadditivity(CostModel::size_based({2, 2, 2}), one).empty());
}

TEST_CASE("analytic cost kinds pass both checks up to 12 commodities") {
  const double coords[] = {0.0};
  const MetricSpace one = build_line_metric(coords);
  for (int k = 1; k <= 12; ++k) {
    for (double x : {0.0, 1.0, 2.0}) {
      const CostModel poly = CostModel::poly(k, x);
      CHECK(check_condition1(poly, one).empty());
      CHECK(check_subadditivity(poly, one).empty());
      CHECK(is_monotone(poly, one));
    }
  }
  // ceil(s / sqrt(k)) satisfies condition (1) only when k is a square.
  for (int root = 1; root <= 3; ++root) {
    const int k = root * root;
    std::vector<double> g(k);
    for (int s = 1; s <= k; ++s) g[s - 1] = (s + root - 1) / root;
    const CostModel thm1 = CostModel::size_based(g);
    CHECK(check_condition1(thm1, one).empty());
    CHECK(check_subadditivity(thm1, one).empty());
    CHECK(is_monotone(thm1, one));
  }
  std::vector<double> g5 = {1, 1, 2, 2, 3};
  CHECK_FALSE(check_condition1(CostModel::size_based(g5), one).empty());
}

TEST_CASE("parse_instance reads a minimal document") {
  const Instance inst = parse_instance(R"({
    "points": ["m"],
    "metric": {"kind": "matrix", "dist": [[0]]},
    "num_commodities": 1,
    "cost": {"kind": "size_based", "g": ["5"]},
    "requests": [{"point": "m", "commodities": [0]}]
  })");
  CHECK(inst.num_requests() == 1);
  CHECK(inst.cost.cost(0, CommoditySet{0}) == 5.0);
}

TEST_CASE("parse_instance accepts rational literals") {
  const Instance inst = parse_instance(R"({
    "points": ["a", "b"],
    "metric": {"kind": "line", "coords": ["0", "3/10"]},
    "num_commodities": 1,
    "cost": {"kind": "poly", "x": "1/2"},
    "requests": []
  })");
  CHECK(inst.metric.distance(0, 1) == doctest::Approx(0.3));
  CHECK(inst.cost.exponent() == 0.5);
}

TEST_CASE("parse_instance rejects bad documents") {
  CHECK_THROWS_AS(parse_instance(R"({
    "points": ["m"], "metric": {"kind": "matrix", "dist": [[0]]},
    "num_commodities": 1, "cost": {"kind": "size_based", "g": [1]},
    "requests": [{"point": "m", "commodities": [1]}]})"),
                  Error);
  CHECK_THROWS_AS(parse_instance(R"({
    "points": ["m"], "metric": {"kind": "matrix", "dist": [[0]]},
    "num_commodities": 1, "cost": {"kind": "fancy"}, "requests": []})"),
                  Error);
  CHECK_THROWS_AS(parse_instance(R"({
    "points": ["m"], "metric": {"kind": "matrix", "dist": [[0]]},
    "num_commodities": 1, "cost": {"kind": "size_based", "g": [1]},
    "requests": [{"point": "q", "commodities": [0]}]})"),
                  Error);
  CHECK_THROWS_AS(parse_instance("{not json"), ParseError);
}

TEST_CASE("serialize then parse is the identity") {
  const Instance tiny = tiny_instance();
  CHECK(parse_instance(serialize_instance(tiny)) == tiny);
  for (int k : {4, 16, 64}) {
    const Instance thm1 = gen_thm1(k, 11);
    CHECK(parse_instance(serialize_instance(thm1)) == thm1);
  }
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Instance inst = testing::fuzz_instance(seed);
    CHECK(parse_instance(serialize_instance(inst)) == inst);
  }
}

TEST_CASE("generated instances satisfy every model assumption") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Instance inst = testing::fuzz_instance(seed);
    CHECK(validate_metric(inst.metric.matrix()).ok());
    CHECK(check_condition1(inst.cost, inst.metric).empty());
    CHECK(check_subadditivity(inst.cost, inst.metric).empty());
    if (inst.cost.kind() != CostModel::Kind::kTable) {
      CHECK(is_monotone(inst.cost, inst.metric));
    }
  }
}
