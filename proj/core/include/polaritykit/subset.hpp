//  Copyright 2026 The polaritykit Authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

#ifndef POLARITYKIT_SUBSET_HPP_
#define POLARITYKIT_SUBSET_HPP_

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace polaritykit {

/// Index of a point in one carrier (lattice elements, X or Y).
using Point = std::size_t;
using Element = std::size_t;

/// A finite set of carrier indices 0..63 stored as a bitmask.
///
/// Every carrier in the library is dense and small, so a single machine word
/// is enough. Sets order by mask value, which is the canonical order used for
/// all enumerations (filters, ideals, stable sets).
class Subset {
 public:
  using Mask = std::uint64_t;
  static constexpr std::size_t kMaxCarrier = 64;

  constexpr Subset() = default;
  constexpr explicit Subset(Mask mask) : mask_(mask) {}

  static constexpr Subset full(std::size_t n) {
    return Subset(n >= kMaxCarrier ? ~Mask{0} : ((Mask{1} << n) - 1));
  }
  static constexpr Subset singleton(std::size_t i) { return Subset(Mask{1} << i); }

  constexpr Mask mask() const { return mask_; }
  constexpr bool contains(std::size_t i) const { return (mask_ >> i) & 1U; }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr std::size_t count() const { return static_cast<std::size_t>(std::popcount(mask_)); }
  constexpr bool subset_of(Subset other) const { return (mask_ & ~other.mask_) == 0; }
  constexpr bool intersects(Subset other) const { return (mask_ & other.mask_) != 0; }

  constexpr void insert(std::size_t i) { mask_ |= Mask{1} << i; }
  constexpr void erase(std::size_t i) { mask_ &= ~(Mask{1} << i); }

  constexpr Subset operator|(Subset o) const { return Subset(mask_ | o.mask_); }
  constexpr Subset operator&(Subset o) const { return Subset(mask_ & o.mask_); }
  constexpr Subset operator-(Subset o) const { return Subset(mask_ & ~o.mask_); }
  constexpr Subset& operator|=(Subset o) { mask_ |= o.mask_; return *this; }
  constexpr Subset& operator&=(Subset o) { mask_ &= o.mask_; return *this; }

  /// Smallest member; undefined on the empty set.
  constexpr std::size_t first() const { return static_cast<std::size_t>(std::countr_zero(mask_)); }

  template <typename F>
  constexpr void for_each(F&& f) const {
    for (Mask m = mask_; m != 0; m &= m - 1) {
      f(static_cast<std::size_t>(std::countr_zero(m)));
    }
  }

  std::vector<std::size_t> members() const {
    std::vector<std::size_t> out;
    out.reserve(count());
    for_each([&](std::size_t i) { out.push_back(i); });
    return out;
  }

  friend constexpr auto operator<=>(Subset, Subset) = default;

 private:
  Mask mask_ = 0;
};

/// "{0,2,5}".
inline std::string to_text(Subset s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](std::size_t i) {
    if (!first) out += ",";
    out += std::to_string(i);
    first = false;
  });
  return out + "}";
}

}  // namespace polaritykit

#endif  // POLARITYKIT_SUBSET_HPP_
