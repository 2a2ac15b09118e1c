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

#ifndef OMFLP_ORDERED_COVER_HPP_
#define OMFLP_ORDERED_COVER_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "omflp/random.hpp"

namespace omflp {

// Elements are 1..n. For element i, A[i-1] and B[i-1] partition {1..i-1}
// and B grows along the order. Element i carries the sets {i} (weight
// c/(|B_i|+1)) and {i} u A_i (weight c).
struct COrderedInstance {
  std::size_t n = 0;
  double c = 1.0;
  std::vector<std::vector<std::size_t>> A;
  std::vector<std::vector<std::size_t>> B;
};

// Human-readable invariant breaches; empty iff valid.
std::vector<std::string> validate_cordered(const COrderedInstance& inst);

struct CoverSet {
  std::vector<std::size_t> elements;
  double weight = 0.0;
};

struct CoverRound {
  std::size_t n = 0;  // instance length when the round started
  std::size_t covered = 0;
  double weight = 0.0;
  bool took_singletons = false;
};

struct CoverResult {
  std::vector<CoverSet> sets;
  double total_weight = 0.0;
  std::vector<CoverRound> rounds;
  // Every shrunk instance passed validate_cordered.
  bool rounds_valid = true;
};

// Repeatedly covers the last element: either {n} u A_n at weight c, or the
// singletons of the last block at c/(|B_n|+1) each, whichever is cheaper per
// covered element (ties go to the single set). Covered elements are removed
// and the rest renumbered. Throws InvalidArgumentError on invalid input.
CoverResult greedy_cover(const COrderedInstance& inst);

// 2 c H_n.
double weight_bound(double c, std::size_t n);

// B_i = {j < i : rank(j) < k_i} for a random ranking and nondecreasing cuts
// k_i, which keeps the B chain monotone.
COrderedInstance random_cordered(Rng& rng, std::size_t n, double c);

}  // namespace omflp

#endif  // OMFLP_ORDERED_COVER_HPP_
