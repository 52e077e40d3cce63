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

#ifndef POLARITYKIT_LATTICE_HPP_
#define POLARITYKIT_LATTICE_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "polaritykit/sort.hpp"
#include "polaritykit/subset.hpp"

namespace polaritykit {

/// A finite bounded lattice on the dense elements 0..size-1.
///
/// Built only through build_lattice, so every instance satisfies the lattice
/// axioms; meet and join tables are precomputed.
class Lattice {
 public:
  std::size_t size() const { return size_; }
  Element bottom() const { return bottom_; }
  Element top() const { return top_; }

  bool leq(Element a, Element b) const { return up_[a].contains(b); }
  Element meet(Element a, Element b) const { return meet_[a * size_ + b]; }
  Element join(Element a, Element b) const { return join_[a * size_ + b]; }

  /// Folded meet/join; the empty meet is top and the empty join is bottom.
  Element meet_all(Subset s) const;
  Element join_all(Subset s) const;

  /// ↑a and ↓a.
  Subset up(Element a) const { return up_[a]; }
  Subset down(Element a) const { return down_[a]; }

  /// Meet and join in L^s: identity for Sort::one, swapped for Sort::dual.
  Element join_in(Sort s, Element a, Element b) const {
    return s == Sort::one ? join(a, b) : meet(a, b);
  }
  Element bottom_in(Sort s) const { return s == Sort::one ? bottom_ : top_; }
  bool leq_in(Sort s, Element a, Element b) const { return s == Sort::one ? leq(a, b) : leq(b, a); }

  /// Covering pairs (a, b), a ⋖ b, in lexicographic order.
  std::vector<std::pair<Element, Element>> covers() const;

  friend bool operator==(const Lattice&, const Lattice&) = default;

 private:
  friend Lattice build_lattice(std::size_t size, std::span<const std::pair<Element, Element>> leq_pairs);

  std::size_t size_ = 0;
  std::vector<Subset> up_;
  std::vector<Subset> down_;
  std::vector<Element> meet_;
  std::vector<Element> join_;
  Element bottom_ = 0;
  Element top_ = 0;
};

/// Builds a lattice from order pairs (a, b) meaning a ≤ b. The reflexive
/// transitive closure is taken first, so a Hasse covering is enough.
///
/// Throws Error with index_out_of_range, bad_size (size 0 or above 64),
/// not_a_partial_order, not_bounded or not_a_lattice.
Lattice build_lattice(std::size_t size, std::span<const std::pair<Element, Element>> leq_pairs);

/// The n-element chain 0 < 1 < ... < n-1.
Lattice make_chain(std::size_t n);
/// M_k: bottom 0, k pairwise incomparable atoms 1..k, top k+1. M2 is the
/// four-element Boolean lattice.
Lattice make_diamond(std::size_t atoms);
/// N5: 0 < a < c < 1 and 0 < b < 1 with b incomparable to a and c.
Lattice make_pentagon();
/// The Boolean lattice of subsets of an n-element set, element i = bitmask i.
Lattice make_boolean(std::size_t n);

/// Every filter (ideal), the improper one included, in ascending bitmask order.
std::vector<Subset> enumerate_filters(const Lattice& lattice);
std::vector<Subset> enumerate_ideals(const Lattice& lattice);

bool is_filter(const Lattice& lattice, Subset s);
bool is_ideal(const Lattice& lattice, Subset s);

/// Smallest filter (ideal) containing s, computed as a finite fixpoint of
/// binary meets (joins) and upward (downward) closure. The filter generated by
/// the empty set is {top}; the ideal is {bottom}.
Subset generate_filter(const Lattice& lattice, Subset s);
Subset generate_ideal(const Lattice& lattice, Subset s);

}  // namespace polaritykit

#endif  // POLARITYKIT_LATTICE_HPP_
