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

#ifndef OMFLP_NUMERIC_HPP_
#define OMFLP_NUMERIC_HPP_

#include <limits>
#include <string_view>

namespace omflp {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

// Tolerance for metric axiom checks.
inline constexpr double kMetricEps = 1e-9;
// Tolerance for constraint slack, tightness and tie comparisons.
inline constexpr double kTightEps = 1e-9;

// (a)_+ = max{a, 0}.
inline constexpr double positive_part(double a) { return a > 0.0 ? a : 0.0; }

// Parses a decimal literal ("0.25", "1e-3") or a rational literal "p/q".
// Throws ParseError on anything else.
double parse_number(std::string_view text);

}  // namespace omflp

#endif  // OMFLP_NUMERIC_HPP_
