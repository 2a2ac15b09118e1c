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

#include "omflp/bounds.hpp"

#include <cmath>

#include "omflp/errors.hpp"

namespace omflp {

double harmonic(std::size_t n) {
  // Kahan summation, smallest terms first.
  double sum = 0.0;
  double carry = 0.0;
  for (std::size_t k = n; k >= 1; --k) {
    const double y = 1.0 / static_cast<double>(k) - carry;
    const double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
  return sum;
}

double gamma(int num_commodities, std::size_t n) {
  if (num_commodities < 1 || n < 1) {
    throw InvalidArgumentError("gamma needs |S| >= 1 and n >= 1");
  }
  return 1.0 / (5.0 * std::sqrt(static_cast<double>(num_commodities)) * harmonic(n));
}

double pd_ratio_ceiling(int num_commodities, std::size_t n) {
  return 1.0 / gamma(num_commodities, n) * 3.0;
}

}  // namespace omflp
