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

#include "omflp/ordered_cover.hpp"

#include <algorithm>
#include <numeric>

#include "omflp/bounds.hpp"
#include "omflp/errors.hpp"

namespace omflp {
namespace {

std::string element_tag(std::size_t i) { return "element " + std::to_string(i); }

// Rebuilds the instance over the surviving elements, renumbered 1..k.
COrderedInstance shrink(const COrderedInstance& inst,
                        const std::vector<std::size_t>& alive) {
  std::vector<std::size_t> rank(inst.n + 1, 0);
  for (std::size_t k = 0; k < alive.size(); ++k) rank[alive[k]] = k + 1;
  COrderedInstance out;
  out.n = alive.size();
  out.c = inst.c;
  out.A.resize(out.n);
  out.B.resize(out.n);
  for (std::size_t k = 0; k < alive.size(); ++k) {
    std::vector<char> in_b(k + 1, 0);
    for (std::size_t j : inst.B[alive[k] - 1]) {
      // A removed member maps to 0 and is reported by the validator.
      out.B[k].push_back(rank[j]);
      if (rank[j] >= 1 && rank[j] <= k) in_b[rank[j]] = 1;
    }
    for (std::size_t j = 1; j <= k; ++j) {
      if (!in_b[j]) out.A[k].push_back(j);
    }
  }
  return out;
}

}  // namespace

std::vector<std::string> validate_cordered(const COrderedInstance& inst) {
  std::vector<std::string> issues;
  if (!(inst.c >= 1.0)) issues.push_back("c must be at least 1");
  if (inst.A.size() != inst.n || inst.B.size() != inst.n) {
    issues.push_back("A and B need one entry per element");
    return issues;
  }
  std::vector<char> prev_b;
  for (std::size_t i = 1; i <= inst.n; ++i) {
    std::vector<int> seen(i, 0);  // 1 = A, 2 = B
    std::vector<char> in_b(inst.n + 1, 0);
    auto mark = [&](const std::vector<std::size_t>& set, int tag, const char* name) {
      for (std::size_t j : set) {
        if (j < 1 || j >= i) {
          issues.push_back(element_tag(i) + ": " + name + " holds " +
                           std::to_string(j) + " outside 1.." + std::to_string(i - 1));
          continue;
        }
        if (seen[j] != 0) {
          issues.push_back(element_tag(i) + ": " + std::to_string(j) +
                           (seen[j] == tag ? " repeated" : " in both A and B"));
        }
        seen[j] = tag;
        if (tag == 2) in_b[j] = 1;
      }
    };
    mark(inst.A[i - 1], 1, "A");
    mark(inst.B[i - 1], 2, "B");
    for (std::size_t j = 1; j < i; ++j) {
      if (seen[j] == 0) {
        issues.push_back(element_tag(i) + ": " + std::to_string(j) +
                         " missing from A and B");
      }
    }
    for (std::size_t j = 1; j < prev_b.size(); ++j) {
      if (prev_b[j] && !in_b[j]) {
        issues.push_back("B_" + std::to_string(i - 1) + " not contained in B_" +
                         std::to_string(i) + " (element " + std::to_string(j) + ")");
      }
    }
    prev_b = std::move(in_b);
  }
  return issues;
}

CoverResult greedy_cover(const COrderedInstance& inst) {
  const std::vector<std::string> issues = validate_cordered(inst);
  if (!issues.empty()) {
    throw InvalidArgumentError("invalid c-ordered instance: " + issues.front());
  }
  // Covered elements never sit in any B, so the original B sets stay valid
  // for the survivors.
  std::vector<std::vector<char>> in_b(inst.n + 1, std::vector<char>(inst.n + 1, 0));
  for (std::size_t i = 1; i <= inst.n; ++i) {
    for (std::size_t j : inst.B[i - 1]) in_b[i][j] = 1;
  }
  std::vector<std::size_t> alive(inst.n);
  std::iota(alive.begin(), alive.end(), std::size_t{1});

  CoverResult result;
  while (!alive.empty()) {
    const std::size_t n = alive.size();
    const std::size_t last = alive.back();
    const std::size_t b_size = inst.B[last - 1].size();

    CoverRound round;
    round.n = n;
    CoverSet chosen;
    std::vector<std::size_t> covered;
    // c/(n-|B|) <= c/(|B|+1) picks the single set.
    if (n - b_size >= b_size + 1) {
      for (std::size_t j : alive) {
        if (!in_b[last][j]) covered.push_back(j);
      }
      chosen.elements = covered;
      chosen.weight = inst.c;
      round.weight = inst.c;
      result.sets.push_back(chosen);
    } else {
      round.took_singletons = true;
      const double w = inst.c / static_cast<double>(b_size + 1);
      for (auto it = alive.rbegin(); it != alive.rend(); ++it) {
        if (in_b[*it] != in_b[last]) break;
        covered.push_back(*it);
      }
      std::reverse(covered.begin(), covered.end());
      for (std::size_t j : covered) {
        result.sets.push_back({{j}, w});
        round.weight += w;
      }
    }
    round.covered = covered.size();
    result.total_weight += round.weight;
    result.rounds.push_back(round);

    std::vector<std::size_t> rest;
    std::set_difference(alive.begin(), alive.end(), covered.begin(),
                        covered.end(), std::back_inserter(rest));
    alive = std::move(rest);
    if (!validate_cordered(shrink(inst, alive)).empty()) result.rounds_valid = false;
  }
  return result;
}

double weight_bound(double c, std::size_t n) { return 2.0 * c * harmonic(n); }

COrderedInstance random_cordered(Rng& rng, std::size_t n, double c) {
  std::vector<std::size_t> rank(n + 1);
  std::iota(rank.begin(), rank.end(), std::size_t{0});
  rng.shuffle(rank);
  COrderedInstance inst;
  inst.n = n;
  inst.c = c;
  inst.A.resize(n);
  inst.B.resize(n);
  // Mix long blocks and frequent cuts across instances.
  const double step_prob = rng.uniform01();
  std::size_t cut = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    if (rng.bernoulli(step_prob)) cut += static_cast<std::size_t>(rng.between(1, 4));
    for (std::size_t j = 1; j < i; ++j) {
      (rank[j] < cut ? inst.B : inst.A)[i - 1].push_back(j);
    }
  }
  return inst;
}

}  // namespace omflp
