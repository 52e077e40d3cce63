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

#ifndef POLARITYKIT_SORTED_RELATION_HPP_
#define POLARITYKIT_SORTED_RELATION_HPP_

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "polaritykit/guards.hpp"
#include "polaritykit/normal_operator.hpp"
#include "polaritykit/polarity.hpp"
#include "polaritykit/sort.hpp"
#include "polaritykit/sorted_operator.hpp"

namespace polaritykit {

/// σ(R) = (i_{n+1}; i_1 ... i_n): output sort first.
struct SortType {
  Sort out = Sort::one;
  std::vector<Sort> args;

  std::size_t arity() const { return args.size(); }

  /// "1;1 1" / "d;1 d".
  std::string to_string() const;
  /// Accepts "1;1 1", "1;11", "(d;1,d)" and ∂ for d. Throws Error(sort_mismatch).
  static SortType parse(std::string_view text);

  friend bool operator==(const SortType&, const SortType&) = default;
};

/// An argument tuple with one unfilled place.
struct HoleTuple {
  std::vector<Point> entries;  // entries[hole] is ignored
  std::size_t hole = 0;

  std::vector<Point> filled(Point v) const {
    std::vector<Point> t = entries;
    t[hole] = v;
    return t;
  }
};

/// An (n+1)-ary sorted relation over a polarity, stored extensionally as the
/// table of its full sections Rū, one per argument tuple ū (row-major).
class SortedRelation {
 public:
  /// The empty relation.
  SortedRelation(std::shared_ptr<const Polarity> polarity, SortType stype, std::string name = "R");

  /// Tuples are (w, u_1, ..., u_n). Throws Error(sort_mismatch) on a wrong
  /// length and Error(index_out_of_range) on a point outside its carrier.
  static SortedRelation from_tuples(std::shared_ptr<const Polarity> polarity, SortType stype,
                                    const std::vector<std::vector<Point>>& tuples, std::string name = "R");
  static SortedRelation from_sections(std::shared_ptr<const Polarity> polarity, SortType stype,
                                      std::vector<Subset> sections, std::string name = "R");

  const Polarity& polarity() const { return *polarity_; }
  const std::shared_ptr<const Polarity>& polarity_ptr() const { return polarity_; }
  const SortType& sort_type() const { return stype_; }
  const std::string& name() const { return name_; }
  std::size_t arity() const { return stype_.arity(); }

  /// Carrier sizes of the argument places.
  std::span<const std::size_t> radices() const { return radices_; }
  std::size_t argument_tuple_count() const { return sections_.size(); }

  bool holds(Point w, std::span<const Point> args) const { return section(args).contains(w); }
  /// Rū. Throws Error(sort_mismatch) for a tuple of the wrong length or range.
  Subset section(std::span<const Point> args) const;
  Subset section_at(std::size_t tuple_index) const { return sections_[tuple_index]; }
  /// wRū[_]_k = {v | wRū[v]_k}.
  Subset hole_section(Point w, const HoleTuple& t) const;

  /// All tuples (w, u_1, ..., u_n) in lexicographic order.
  std::vector<std::vector<Point>> tuples() const;
  std::size_t size() const;

  /// Same polarity (by value), sort type and tuples; names are not compared.
  friend bool operator==(const SortedRelation& a, const SortedRelation& b) {
    return *a.polarity_ == *b.polarity_ && a.stype_ == b.stype_ && a.sections_ == b.sections_;
  }

 private:
  std::shared_ptr<const Polarity> polarity_;
  SortType stype_;
  std::string name_;
  std::vector<std::size_t> radices_;
  std::vector<Subset> sections_;
};

/// R′ of sort type (bar(out); args) with R′ū = (Rū)′.
SortedRelation galois_dual(const SortedRelation& r);

/// A section of R′ that is not closure-fixed.
struct SectionWitness {
  bool full_section = true;  // Rū itself, otherwise a k-section wR′ū[_]_k
  Point w = 0;
  std::vector<Point> tuple;
  std::size_t hole = 0;
  Subset section;
  Subset closure;

  std::string describe() const;
};

struct StabilityReport {
  bool stable = true;
  std::optional<SectionWitness> witness;
};

/// Every full section R′ū and every k-section wR′ū[_]_k of the Galois dual
/// is a Galois set.
StabilityReport sections_all_stable(const SortedRelation& r);
/// Only the k-sections (0-based place) of the Galois dual.
StabilityReport k_sections_stable(const SortedRelation& r, std::size_t k);

/// α_R(W̄) = ⋃_{w̄∈W̄} Rw̄. Throws Error(sort_mismatch).
Subset image_operator(const SortedRelation& r, std::span<const Subset> w);

/// β^k_R(W̄[U]_k): the largest V with α_R(W̄[V]_k) ⊆ U; w[k] is ignored.
Subset residual_sets(const SortedRelation& r, std::size_t k, std::span<const Subset> w, Subset u);

/// ᾱ_R(F̄) = (α_R(F̄))″. Throws Error(sort_mismatch) or Error(not_galois).
GaloisSet closed_image(const SortedRelation& r, std::span<const GaloisSet> f);

/// The three defining forms of the Galois-level residual.
struct ResidualForms {
  Subset union_of_galois;  // ⋃{F Galois | α_R(Ē[F]_k) ⊆ G}
  Subset union_of_closed;  // ⋃{Γu | α_R(Ē[Γu]_k) ⊆ G}
  Subset pointwise;        // {u | α_R(Ē[Γu]_k) ⊆ G}
};

/// e[k] is ignored; g is a Galois set of the output sort.
ResidualForms residual_forms(const SortedRelation& r, std::size_t k, std::span<const GaloisSet> e,
                             const GaloisSet& g);

/// β^k_{R/}(Ē[G]_k). Throws Error(not_residuated) when the forms disagree or
/// the result is not closure-fixed.
GaloisSet residual_galois(const SortedRelation& r, std::size_t k, std::span<const GaloisSet> e,
                          const GaloisSet& g);

/// γ̄^k_R(F̄) = ⋂{E | ᾱ_R(F̄[E′]_k) ⊆ F′_k}, where f[k] is a Galois set of sort
/// bar(out) and the result has sort bar(i_k).
GaloisSet conjugate_operator(const SortedRelation& r, std::size_t k, std::span<const GaloisSet> f);

/// S with wSp̄[v]_k iff w ∈ (vR′p̄[_]_k)′, of sort type
/// (bar(i_k); ..., bar(i_{n+1}) at k, ...). The construction only reads the
/// k-sections of R′, but every section must be Galois; otherwise this throws
/// Error(sections_not_stable).
SortedRelation conjugate_relation_from(const SortedRelation& r, std::size_t k);

/// α_R(F̄) ⊆ G iff η_S(F̄[G′]_k) ⊆ F′_k over all Galois F̄, G. Throws
/// Error(sort_mismatch) unless the sort types fit the definition.
bool is_conjugate_pair(const SortedRelation& r, const SortedRelation& s, std::size_t k);

/// ᾱ_R tabulated over all tuples of Galois sets.
SortedOperator closed_image_operator(const SortedRelation& r);

/// ᾱ_R(F̄[⋁G_i]_k) = ⋁ ᾱ_R(F̄[G_i]_k) for every family of Galois sets at
/// place k (all 2^|𝒢| of them) and every Galois context. Throws
/// Error(guard_exceeded) when the place-k lattice has more than `guard` sets.
AdditivityReport check_complete_additivity(const SortedRelation& r, std::size_t k,
                                           std::size_t guard = default_guards().family);

/// Complete additivity of ᾱ_R at place k, the conjugacy law for its
/// constructed conjugate γ̄ and the residuation law for its constructed
/// residual β̄, plus β̄(F̄[G]_k) = (γ̄(F̄[G′]_k))′. The three verdicts always agree.
struct EquivalenceReport {
  bool additive = true;
  bool conjugate_law = true;
  bool residual_law = true;
  bool residual_is_polar_of_conjugate = true;

  bool agree() const {
    return additive == conjugate_law && conjugate_law == residual_law && residual_is_polar_of_conjugate;
  }
};

EquivalenceReport additivity_equivalence(const SortedRelation& r, std::size_t k,
                                         std::size_t guard = default_guards().family);

/// 𝒢(X) with one single-sorted operator per relation: ∂-places receive primed
/// arguments and a ∂ output is primed back. Throws Error(sections_not_stable)
/// or Error(sort_mismatch) when relations live on another polarity.
LatticeExpansion complex_algebra(const Polarity& p, std::span<const SortedRelation> relations);

/// F_S(F̄) = (⋂{Sz̄ | z̄ ∈ F̄})′ for S of any sort type; the result has sort
/// bar(out). The classical case is S of sort (d;1...1).
GaloisSet goldblatt_operator(const SortedRelation& s, std::span<const GaloisSet> f);

}  // namespace polaritykit

#endif  // POLARITYKIT_SORTED_RELATION_HPP_
