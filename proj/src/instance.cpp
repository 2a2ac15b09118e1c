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

#include "omflp/instance.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "omflp/errors.hpp"
#include "omflp/numeric.hpp"

namespace omflp {
namespace {

using Json = nlohmann::ordered_json;

double number_field(const Json& value, const std::string& what) {
  if (value.is_number()) return value.get<double>();
  if (value.is_string()) return parse_number(value.get<std::string>());
  throw ParseError(what + ": expected a number or a numeric string");
}

std::vector<double> number_array(const Json& value, const std::string& what) {
  if (!value.is_array()) throw ParseError(what + ": expected an array");
  std::vector<double> out;
  for (const auto& item : value) out.push_back(number_field(item, what));
  return out;
}

std::string point_id(const Json& value) {
  if (value.is_string()) return value.get<std::string>();
  if (value.is_number_integer()) return value.dump();
  throw ParseError("point ids must be strings or integers");
}

const Json& require(const Json& object, const char* key) {
  auto it = object.find(key);
  if (it == object.end()) {
    throw ParseError(std::string("missing field '") + key + "'");
  }
  return *it;
}

CommoditySet commodity_list(const Json& value, int num_commodities,
                            const std::string& what) {
  if (!value.is_array()) throw ParseError(what + ": expected an index array");
  CommoditySet set;
  for (const auto& item : value) {
    if (!item.is_number_integer()) {
      throw ParseError(what + ": commodity indices must be integers");
    }
    const auto e = item.get<long long>();
    if (e < 0 || e >= num_commodities) {
      throw ParseError(what + ": commodity index " + std::to_string(e) +
                       " outside [0, " + std::to_string(num_commodities) + ")");
    }
    set.insert(static_cast<Commodity>(e));
  }
  if (set.empty()) throw ParseError(what + ": empty commodity set");
  return set;
}

Json commodity_json(CommoditySet set) {
  Json out = Json::array();
  for (Commodity e : set) out.push_back(e);
  return out;
}

PointIndex lookup_point(const MetricSpace& metric, const Json& value,
                        const std::string& what) {
  const std::string id = point_id(value);
  auto p = metric.find(id);
  if (!p) throw ParseError(what + ": unknown point '" + id + "'");
  return *p;
}

CostModel parse_cost(const Json& doc, const MetricSpace& metric, int k) {
  const auto& kind = require(doc, "kind");
  if (!kind.is_string()) throw ParseError("cost.kind must be a string");
  const auto name = kind.get<std::string>();
  if (name == "poly") {
    return CostModel::poly(k, number_field(require(doc, "x"), "cost.x"));
  }
  if (name == "size_based") {
    auto g = number_array(require(doc, "g"), "cost.g");
    if (static_cast<int>(g.size()) != k) {
      throw ParseError("cost.g must list one cost per size 1..num_commodities");
    }
    return CostModel::size_based(std::move(g));
  }
  if (name == "table") {
    std::vector<CostModel::TableRow> rows(metric.size());
    const auto& entries = require(doc, "entries");
    if (!entries.is_array()) throw ParseError("cost.entries must be an array");
    for (const auto& entry : entries) {
      const PointIndex m = lookup_point(metric, require(entry, "point"), "cost entry");
      const CommoditySet sigma =
          commodity_list(require(entry, "config"), k, "cost entry config");
      const double value = number_field(require(entry, "cost"), "cost entry");
      if (!rows[m].emplace(sigma.bits(), value).second) {
        throw ParseError("duplicate cost entry for point '" + metric.id(m) +
                         "' and configuration " + sigma.to_string());
      }
    }
    return CostModel::table(k, std::move(rows));
  }
  throw ParseError("unknown cost kind '" + name + "'");
}

Json cost_json(const CostModel& cost, const MetricSpace& metric) {
  Json out;
  switch (cost.kind()) {
    case CostModel::Kind::kPoly:
      out["kind"] = "poly";
      out["x"] = cost.exponent();
      break;
    case CostModel::Kind::kSizeBased:
      out["kind"] = "size_based";
      out["g"] = cost.g();
      break;
    case CostModel::Kind::kTable: {
      out["kind"] = "table";
      Json entries = Json::array();
      const auto& rows = cost.table_rows();
      for (PointIndex m = 0; m < rows.size(); ++m) {
        std::vector<std::pair<std::uint64_t, double>> sorted(rows[m].begin(),
                                                             rows[m].end());
        std::sort(sorted.begin(), sorted.end());
        for (const auto& [bits, value] : sorted) {
          Json entry;
          entry["point"] = metric.id(m);
          entry["config"] = commodity_json(CommoditySet(bits));
          entry["cost"] = value;
          entries.push_back(std::move(entry));
        }
      }
      out["entries"] = std::move(entries);
      break;
    }
  }
  return out;
}

}  // namespace

void Instance::add_request(PointIndex point, CommoditySet commodities) {
  requests.push_back({point, commodities, requests.size()});
}

void check_instance_structure(const Instance& inst) {
  if (inst.cost.num_commodities() != inst.num_commodities) {
    throw StructuralError("cost model and instance disagree on |S|");
  }
  if (inst.cost.kind() == CostModel::Kind::kTable &&
      inst.cost.table_rows().size() > inst.metric.size()) {
    throw StructuralError("cost table references more points than the metric");
  }
  const CommoditySet universe = inst.universe();
  for (std::size_t r = 0; r < inst.requests.size(); ++r) {
    const Request& req = inst.requests[r];
    if (req.arrival_index != r) {
      throw StructuralError("request " + std::to_string(r) +
                            " has arrival index " +
                            std::to_string(req.arrival_index));
    }
    if (req.point >= inst.metric.size()) {
      throw StructuralError("request " + std::to_string(r) +
                            " references an unknown point");
    }
    if (req.commodities.empty() || !req.commodities.is_subset_of(universe)) {
      throw StructuralError("request " + std::to_string(r) +
                            " demands an empty set or commodities outside S");
    }
  }
}

Instance parse_instance(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text.begin(), text.end());
  } catch (const Json::exception& ex) {
    throw ParseError(std::string("malformed instance document: ") + ex.what());
  }
  if (!doc.is_object()) throw ParseError("instance document must be an object");
  try {
    Instance inst;
    std::vector<std::string> ids;
    const auto& points = require(doc, "points");
    if (!points.is_array()) throw ParseError("points must be an array");
    for (const auto& p : points) ids.push_back(point_id(p));

    const auto& metric = require(doc, "metric");
    const auto& metric_kind = require(metric, "kind");
    if (metric_kind == "line") {
      const auto coords = number_array(require(metric, "coords"), "metric.coords");
      if (coords.size() != ids.size()) {
        throw ParseError("metric.coords must have one entry per point");
      }
      inst.metric = MetricSpace::line(coords, ids);
    } else if (metric_kind == "matrix") {
      const auto& rows = require(metric, "dist");
      if (!rows.is_array()) throw ParseError("metric.dist must be an array");
      DistanceMatrix dist;
      for (const auto& row : rows) dist.push_back(number_array(row, "metric.dist"));
      inst.metric = MetricSpace(ids, dist);
    } else {
      throw ParseError("unknown metric kind " + metric_kind.dump());
    }

    const auto& k = require(doc, "num_commodities");
    if (!k.is_number_integer() || k.get<long long>() < 1 ||
        k.get<long long>() > kMaxCommodities) {
      throw ParseError("num_commodities must be an integer in [1, 64]");
    }
    inst.num_commodities = k.get<int>();
    inst.cost = parse_cost(require(doc, "cost"), inst.metric, inst.num_commodities);

    const auto& requests = require(doc, "requests");
    if (!requests.is_array()) throw ParseError("requests must be an array");
    for (const auto& req : requests) {
      const PointIndex p = lookup_point(inst.metric, require(req, "point"), "request");
      inst.add_request(p, commodity_list(require(req, "commodities"),
                                         inst.num_commodities, "request"));
    }
    if (auto it = doc.find("opt_upper_bound"); it != doc.end() && !it->is_null()) {
      inst.known_opt_upper_bound = number_field(*it, "opt_upper_bound");
    }
    check_instance_structure(inst);
    return inst;
  } catch (const ParseError&) {
    throw;
  } catch (const Json::exception& ex) {
    throw ParseError(std::string("malformed instance document: ") + ex.what());
  } catch (const Error& ex) {
    throw ParseError(ex.what());
  }
}

std::string serialize_instance(const Instance& inst) {
  Json doc;
  doc["points"] = inst.metric.ids();
  Json metric;
  if (inst.metric.coords()) {
    metric["kind"] = "line";
    metric["coords"] = *inst.metric.coords();
  } else {
    metric["kind"] = "matrix";
    metric["dist"] = inst.metric.matrix();
  }
  doc["metric"] = std::move(metric);
  doc["num_commodities"] = inst.num_commodities;
  doc["cost"] = cost_json(inst.cost, inst.metric);
  Json requests = Json::array();
  for (const Request& req : inst.requests) {
    Json item;
    item["point"] = inst.metric.id(req.point);
    item["commodities"] = commodity_json(req.commodities);
    requests.push_back(std::move(item));
  }
  doc["requests"] = std::move(requests);
  if (inst.known_opt_upper_bound) {
    doc["opt_upper_bound"] = *inst.known_opt_upper_bound;
  }
  return doc.dump(2) + "\n";
}

Instance load_instance(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open instance file " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_instance(buffer.str());
}

void save_instance(const Instance& inst, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write instance file " + path.string());
  out << serialize_instance(inst);
}

}  // namespace omflp
