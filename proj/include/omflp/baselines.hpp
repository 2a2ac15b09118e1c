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

#ifndef OMFLP_BASELINES_HPP_
#define OMFLP_BASELINES_HPP_

#include <cstdint>

#include "omflp/instance.hpp"
#include "omflp/solution.hpp"

namespace omflp {

// Runs the randomized algorithm separately for each commodity e on the
// requests demanding e, with costs f_m^{e} and seed + e, and merges the
// results. Only single-commodity facilities are opened.
Solution run_per_commodity(const Instance& inst, std::uint64_t seed);

// Greedy without prediction: each demanded commodity either connects to the
// nearest facility offering it or opens {e} at argmin_m f_m^{e} + d(m, r),
// whichever is cheaper (ties connect).
Solution run_no_prediction(const Instance& inst);

}  // namespace omflp

#endif  // OMFLP_BASELINES_HPP_
