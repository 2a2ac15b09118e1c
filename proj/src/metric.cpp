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

#include "omflp/metric.hpp"

#include <cmath>
#include <sstream>

#include "omflp/errors.hpp"
#include "omflp/numeric.hpp"

namespace omflp {

std::string MetricViolation::describe() const {
  std::ostringstream out;
  switch (axiom) {
    case Axiom::kNonzeroDiagonal:
      out << "d(" << i << "," << i << ") != 0";
      break;
    case Axiom::kNegative:
      out << "d(" << i << "," << j << ") < 0";
      break;
    case Axiom::kAsymmetric:
      out << "d(" << i << "," << j << ") != d(" << j << "," << i << ")";
      break;
    case Axiom::kTriangle:
      out << "triangle (" << i << "," << j << "," << k << "): d(" << i << ","
          << k << ") > d(" << i << "," << j << ") + d(" << j << "," << k
          << ")";
      break;
  }
  out << " by " << excess;
  return out.str();
}

MetricReport validate_metric(const DistanceMatrix& dist) {
  const std::size_t n = dist.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (dist[i].size() != n) {
      throw StructuralError("distance matrix row " + std::to_string(i) +
                            " has " + std::to_string(dist[i].size()) +
                            " entries, expected " + std::to_string(n));
    }
  }
  using Axiom = MetricViolation::Axiom;
  MetricReport report;
  for (std::size_t i = 0; i < n; ++i) {
    if (std::abs(dist[i][i]) > kMetricEps) {
      report.violations.push_back(
          {Axiom::kNonzeroDiagonal, i, i, i, std::abs(dist[i][i])});
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (!std::isfinite(dist[i][j]) || dist[i][j] < -kMetricEps) {
        report.violations.push_back({Axiom::kNegative, i, j, i, -dist[i][j]});
      }
      if (j > i && std::abs(dist[i][j] - dist[j][i]) > kMetricEps) {
        report.violations.push_back(
            {Axiom::kAsymmetric, i, j, i, std::abs(dist[i][j] - dist[j][i])});
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        const double excess = dist[i][k] - (dist[i][j] + dist[j][k]);
        if (excess > kMetricEps) {
          report.violations.push_back({Axiom::kTriangle, i, j, k, excess});
        }
      }
    }
  }
  return report;
}

MetricSpace::MetricSpace(std::vector<std::string> ids,
                         const DistanceMatrix& dist)
    : ids_(std::move(ids)) {
  const std::size_t n = ids_.size();
  if (dist.size() != n) {
    throw StructuralError("distance matrix has " + std::to_string(dist.size()) +
                          " rows for " + std::to_string(n) + " points");
  }
  dist_.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (dist[i].size() != n) {
      throw StructuralError("distance matrix row " + std::to_string(i) +
                            " is not of length " + std::to_string(n));
    }
    dist_.insert(dist_.end(), dist[i].begin(), dist[i].end());
  }
  for (std::size_t p = 0; p < n; ++p) {
    if (!index_.emplace(ids_[p], p).second) {
      throw StructuralError("duplicate point id '" + ids_[p] + "'");
    }
  }
}

MetricSpace MetricSpace::line(std::span<const double> coords,
                              std::vector<std::string> ids) {
  const std::size_t n = coords.size();
  if (ids.empty()) {
    for (std::size_t p = 0; p < n; ++p) ids.push_back(std::to_string(p));
  }
  DistanceMatrix dist(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      dist[i][j] = std::abs(coords[i] - coords[j]);
    }
  }
  MetricSpace space(std::move(ids), dist);
  space.coords_ = std::vector<double>(coords.begin(), coords.end());
  return space;
}

std::optional<PointIndex> MetricSpace::find(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

DistanceMatrix MetricSpace::matrix() const {
  const std::size_t n = size();
  DistanceMatrix out(n, std::vector<double>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out[i][j] = distance(i, j);
  }
  return out;
}

MetricSpace build_line_metric(std::span<const double> coords) {
  return MetricSpace::line(coords);
}

}  // namespace omflp
