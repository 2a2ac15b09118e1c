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

#ifndef OMFLP_BOUNDS_HPP_
#define OMFLP_BOUNDS_HPP_

#include <cstddef>

namespace omflp {

// H_n = 1 + 1/2 + ... + 1/n; H_0 = 0.
double harmonic(std::size_t n);

// Dual scaling factor 1/(5 sqrt|S| H_n).
double gamma(int num_commodities, std::size_t n);

// 15 sqrt|S| H_n: competitive ceiling of the primal-dual algorithm.
double pd_ratio_ceiling(int num_commodities, std::size_t n);

}  // namespace omflp

#endif  // OMFLP_BOUNDS_HPP_
