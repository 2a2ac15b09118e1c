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

#ifndef OMFLP_COMMODITY_SET_HPP_
#define OMFLP_COMMODITY_SET_HPP_

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace omflp {

// Commodities are the indices 0..|S|-1.
using Commodity = int;

inline constexpr int kMaxCommodities = 64;

// A configuration: a subset of the commodity universe, stored as a bitset.
class CommoditySet {
 public:
  constexpr CommoditySet() = default;
  constexpr explicit CommoditySet(std::uint64_t bits) : bits_(bits) {}
  CommoditySet(std::initializer_list<Commodity> items) {
    for (Commodity e : items) insert(e);
  }

  static constexpr CommoditySet single(Commodity e) {
    return CommoditySet(std::uint64_t{1} << e);
  }
  // {0, ..., k-1}.
  static constexpr CommoditySet full(int k) {
    return k >= 64 ? CommoditySet(~std::uint64_t{0})
                   : CommoditySet((std::uint64_t{1} << k) - 1);
  }
  static CommoditySet from_vector(const std::vector<Commodity>& items) {
    CommoditySet s;
    for (Commodity e : items) s.insert(e);
    return s;
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(Commodity e) const { return (bits_ >> e) & 1U; }
  constexpr bool is_subset_of(CommoditySet other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  void insert(Commodity e) { bits_ |= std::uint64_t{1} << e; }
  void erase(Commodity e) { bits_ &= ~(std::uint64_t{1} << e); }

  // Lowest commodity index; undefined on an empty set.
  constexpr Commodity front() const { return std::countr_zero(bits_); }

  std::vector<Commodity> to_vector() const {
    std::vector<Commodity> out;
    for (Commodity e : *this) out.push_back(e);
    return out;
  }
  std::string to_string() const;

  friend constexpr CommoditySet operator|(CommoditySet a, CommoditySet b) {
    return CommoditySet(a.bits_ | b.bits_);
  }
  friend constexpr CommoditySet operator&(CommoditySet a, CommoditySet b) {
    return CommoditySet(a.bits_ & b.bits_);
  }
  // Set difference.
  friend constexpr CommoditySet operator-(CommoditySet a, CommoditySet b) {
    return CommoditySet(a.bits_ & ~b.bits_);
  }
  friend constexpr bool operator==(CommoditySet, CommoditySet) = default;
  friend constexpr auto operator<=>(CommoditySet a, CommoditySet b) {
    return a.bits_ <=> b.bits_;
  }

  // Iterates members in increasing index order.
  class iterator {
   public:
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr Commodity operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_;
  };
  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

 private:
  std::uint64_t bits_ = 0;
};

inline std::string CommoditySet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (Commodity e : *this) {
    if (!first) out += ",";
    out += std::to_string(e);
    first = false;
  }
  return out + "}";
}

}  // namespace omflp

#endif  // OMFLP_COMMODITY_SET_HPP_
