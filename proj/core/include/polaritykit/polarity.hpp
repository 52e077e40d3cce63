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

#ifndef POLARITYKIT_POLARITY_HPP_
#define POLARITYKIT_POLARITY_HPP_

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "polaritykit/lattice.hpp"
#include "polaritykit/report.hpp"
#include "polaritykit/sort.hpp"
#include "polaritykit/subset.hpp"

namespace polaritykit {

/// A polarity (X, ⊩, Y). Points of X are indices 0..nx-1, points of Y are
/// 0..ny-1; the incidence is kept both row-wise and column-wise.
class Polarity {
 public:
  Polarity() = default;
  /// Throws Error(bad_size) for carriers above 64 and Error(index_out_of_range)
  /// for pairs outside the carriers.
  Polarity(std::size_t nx, std::size_t ny, std::span<const std::pair<Point, Point>> incidence);

  /// rows[x] = {y | x ⊩ y}.
  static Polarity from_rows(std::size_t ny, std::vector<Subset> rows);

  std::size_t nx() const { return rows_.size(); }
  std::size_t ny() const { return cols_.size(); }
  std::size_t carrier_size(Sort s) const { return s == Sort::one ? nx() : ny(); }
  Subset carrier(Sort s) const { return Subset::full(carrier_size(s)); }

  bool incident(Point x, Point y) const { return rows_[x].contains(y); }
  /// {y | x ⊩ y} and {x | x ⊩ y}.
  Subset row(Point x) const { return rows_[x]; }
  Subset column(Point y) const { return cols_[y]; }
  /// The points of the opposite sort incident with u, i.e. {u}′.
  Subset neighbours(Sort s, Point u) const { return s == Sort::one ? rows_[u] : cols_[u]; }

  /// U⊥ = {y | ∀x∈U. x ⊩ y}.
  Subset polar_right(Subset u) const;
  /// ⊥V = {x | ∀y∈V. x ⊩ y}.
  Subset polar_left(Subset v) const;
  /// The prime map on a subset of the given sort; lands in the other sort.
  Subset polar(Sort s, Subset u) const { return s == Sort::one ? polar_right(u) : polar_left(u); }
  /// U″.
  Subset double_polar(Sort s, Subset u) const { return polar(bar(s), polar(s, u)); }

  std::vector<std::pair<Point, Point>> incidence_pairs() const;

  friend bool operator==(const Polarity&, const Polarity&) = default;

 private:
  std::vector<Subset> rows_;
  std::vector<Subset> cols_;
};

/// A stable (sort 1, over X) or co-stable (sort ∂, over Y) set. Only the
/// library's constructors guarantee closure-fixedness; is_galois re-checks.
struct GaloisSet {
  Sort sort = Sort::one;
  Subset members;

  friend auto operator<=>(const GaloisSet&, const GaloisSet&) = default;
};

bool is_galois(const Polarity& p, const GaloisSet& g);
/// G′ as a Galois set of the other sort.
GaloisSet prime(const Polarity& p, const GaloisSet& g);

/// The closure U″ of U ⊆ Z_s. Throws Error(index_out_of_range).
GaloisSet closure(const Polarity& p, Subset u, Sort s);

enum class StableEnumeration { automatic, powerset, intersection_closure };

/// All Galois sets of one sort, ascending by mask, with lattice operations.
class StableLattice {
 public:
  StableLattice(Polarity polarity, Sort sort, std::vector<Subset> sets);

  Sort sort() const { return sort_; }
  std::size_t size() const { return sets_.size(); }
  const std::vector<Subset>& sets() const { return sets_; }
  Subset at(std::size_t i) const { return sets_[i]; }
  GaloisSet galois(std::size_t i) const { return GaloisSet{sort_, sets_[i]}; }

  std::optional<std::size_t> index_of(Subset s) const;
  /// index_of or Error(not_galois).
  std::size_t require_index(Subset s) const;

  std::size_t bottom() const { return 0; }  // the closure of ∅ has the least mask
  std::size_t top() const { return sets_.size() - 1; }

  std::size_t meet(std::size_t a, std::size_t b) const;
  /// Closure of the union.
  std::size_t join(std::size_t a, std::size_t b) const;
  bool leq(std::size_t a, std::size_t b) const { return sets_[a].subset_of(sets_[b]); }

  /// The inclusion order as a Lattice over indices 0..size-1.
  Lattice as_lattice() const;

  const Polarity& polarity() const { return polarity_; }

 private:
  Polarity polarity_;
  Sort sort_;
  std::vector<Subset> sets_;
};

/// Every closure-fixed subset of Z_s. automatic uses the powerset scan up to
/// 12 points and intersection closure above that.
StableLattice all_stable_sets(const Polarity& p, Sort s,
                              StableEnumeration method = StableEnumeration::automatic);

/// up[u] = {z | u ⪯ z}, where u ⪯ z iff {u}′ ⊆ {z}′. This is also Γu.
std::vector<Subset> preorder(const Polarity& p, Sort s);

bool is_separated(const Polarity& p);
/// Both irreducibility conditions over (Z, ⩽). Throws Error(not_separated).
bool is_reduced(const Polarity& p);

/// A point of the disjoint union Z = X ⊎ Y.
struct ZPoint {
  Sort sort = Sort::one;
  Point index = 0;

  friend auto operator<=>(const ZPoint&, const ZPoint&) = default;
};

/// The order ⩽ on X ⊎ Y of a separated frame, computed from its four
/// displayed cases (not from set inclusion).
class ZOrder {
 public:
  ZOrder(std::size_t nx, std::size_t ny) : nx_(nx), ny_(ny) {
    blocks_[0].assign(nx, Subset{});  // x ⩽ z
    blocks_[1].assign(nx, Subset{});  // x ⩽ y
    blocks_[2].assign(ny, Subset{});  // y ⩽ x
    blocks_[3].assign(ny, Subset{});  // y ⩽ v
  }

  bool leq(ZPoint a, ZPoint b) const { return blocks_[block(a.sort, b.sort)][a.index].contains(b.index); }
  void set(ZPoint a, ZPoint b) { blocks_[block(a.sort, b.sort)][a.index].insert(b.index); }

  std::size_t nx() const { return nx_; }
  std::size_t ny() const { return ny_; }
  std::vector<ZPoint> points() const;

  bool reflexive() const;
  bool transitive() const;
  /// Antisymmetry within X and within Y; cross-sort pairs are never merged.
  bool antisymmetric_within_sorts() const;

 private:
  static std::size_t block(Sort a, Sort b) {
    return (a == Sort::one ? 0 : 2) + (b == Sort::one ? 0 : 1);
  }

  std::size_t nx_;
  std::size_t ny_;
  std::array<std::vector<Subset>, 4> blocks_;
};

/// Throws Error(not_separated).
ZOrder z_order(const Polarity& p);

/// The image of a point of Z in 𝒢(X): Γx for x ∈ X, ⊥{y} for y ∈ Y.
Subset z_embedding(const Polarity& p, ZPoint u);

/// Stable sets as joins of closed and meets of open elements, and the
/// embedding of (Z, ⩽) into 𝒢(X) as an order embedding that is join-dense
/// from X and meet-dense from Y. Throws Error(not_separated).
Report dm_completion_check(const Polarity& p);

/// Γu as a Galois set of u's sort.
GaloisSet closed_element(const Polarity& p, Sort s, Point u);
/// {v}′ for v of sort s: an open element of the lattice of sort bar(s).
GaloisSet open_element(const Polarity& p, Sort s, Point v);
/// A point v of the other sort with u | v and Γu = {v}′, if one exists.
std::optional<Point> clopen_witness(const Polarity& p, Sort s, Point u);
/// True iff g equals some closed element Γu that has a clopen witness.
bool is_clopen(const Polarity& p, const GaloisSet& g);

}  // namespace polaritykit

#endif  // POLARITYKIT_POLARITY_HPP_
