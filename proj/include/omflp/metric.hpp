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

#ifndef OMFLP_METRIC_HPP_
#define OMFLP_METRIC_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace omflp {

using PointIndex = std::size_t;
using DistanceMatrix = std::vector<std::vector<double>>;

struct MetricViolation {
  enum class Axiom { kNonzeroDiagonal, kNegative, kAsymmetric, kTriangle };
  Axiom axiom;
  // Indices involved; for kTriangle the violated inequality is
  // d(i,k) <= d(i,j) + d(j,k). Unused indices repeat i.
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t k = 0;
  // Amount by which the axiom is exceeded.
  double excess = 0.0;

  std::string describe() const;
};

struct MetricReport {
  std::vector<MetricViolation> violations;
  bool ok() const { return violations.empty(); }
};

// Checks zero diagonal, nonnegativity, symmetry and the triangle inequality
// (each within kMetricEps). Throws StructuralError if `dist` is not square.
MetricReport validate_metric(const DistanceMatrix& dist);

// A finite (pseudo-)metric space over opaque point identifiers. Distinct
// points at distance zero are allowed.
class MetricSpace {
 public:
  MetricSpace() = default;
  // Throws StructuralError if the matrix is not |ids| x |ids| or ids repeat.
  // Axioms are not checked here; see validate_metric.
  MetricSpace(std::vector<std::string> ids, const DistanceMatrix& dist);

  // Points on the real line; ids default to "0", "1", ...
  static MetricSpace line(std::span<const double> coords,
                          std::vector<std::string> ids = {});

  std::size_t size() const { return ids_.size(); }
  double distance(PointIndex a, PointIndex b) const {
    return dist_[a * ids_.size() + b];
  }
  const std::string& id(PointIndex p) const { return ids_[p]; }
  const std::vector<std::string>& ids() const { return ids_; }
  std::optional<PointIndex> find(const std::string& id) const;

  DistanceMatrix matrix() const;
  // Set when the space was built from line coordinates.
  const std::optional<std::vector<double>>& coords() const { return coords_; }

  friend bool operator==(const MetricSpace& a, const MetricSpace& b) {
    return a.ids_ == b.ids_ && a.dist_ == b.dist_ && a.coords_ == b.coords_;
  }

 private:
  std::vector<std::string> ids_;
  std::vector<double> dist_;
  std::optional<std::vector<double>> coords_;
  std::unordered_map<std::string, PointIndex> index_;
};

MetricSpace build_line_metric(std::span<const double> coords);

}  // namespace omflp

#endif  // OMFLP_METRIC_HPP_
