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

#ifndef POLARITYKIT_CANONICAL_FRAME_HPP_
#define POLARITYKIT_CANONICAL_FRAME_HPP_

#include <array>
#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "polaritykit/guards.hpp"
#include "polaritykit/normal_operator.hpp"
#include "polaritykit/polarity.hpp"
#include "polaritykit/report.hpp"
#include "polaritykit/sorted_relation.hpp"

namespace polaritykit {

/// The frame of filters X and ideals Y of a finite lattice expansion, with
/// x ⊩ y iff x ∩ y ≠ ∅ and one canonical relation per operator.
class CanonicalFrame {
 public:
  const LatticeExpansion& source() const { return source_; }
  const Lattice& lattice() const { return source_.lattice; }
  const Polarity& polarity() const { return *polarity_; }
  const std::shared_ptr<const Polarity>& polarity_ptr() const { return polarity_; }

  /// X (filters) and Y (ideals), each ascending by bitmask.
  const std::vector<Subset>& filters() const { return points_[0]; }
  const std::vector<Subset>& ideals() const { return points_[1]; }
  /// The filter (sort 1) or ideal (sort ∂) behind a point.
  Subset point_set(Sort s, Point p) const { return points_[s == Sort::one ? 0 : 1].at(p); }
  std::optional<Point> index_of(Sort s, Subset set) const;
  /// x_a = ↑a or y_a = ↓a.
  Point principal(Sort s, Element a) const { return principal_[s == Sort::one ? 0 : 1].at(a); }
  /// "F_a" for ↑a, "I_a" for ↓a, using the source's element names.
  std::string point_name(Sort s, Point p) const;

  /// relations()[i] belongs to source().operators[i] and carries its name.
  const std::vector<SortedRelation>& relations() const { return relations_; }
  const SortedRelation& relation(std::string_view name) const;

 private:
  friend CanonicalFrame build_canonical_frame(LatticeExpansion source, const Guards& guards);

  LatticeExpansion source_;
  std::shared_ptr<const Polarity> polarity_;
  std::array<std::vector<Subset>, 2> points_;
  std::array<std::vector<Point>, 2> principal_;
  std::vector<SortedRelation> relations_;
};

/// Throws Error(guard_exceeded) when operators are present and the lattice has
/// more than guards.lattice elements or an operator more than guards.arity places.
CanonicalFrame build_canonical_frame(LatticeExpansion source, const Guards& guards = default_guards());

/// The frame of a bare lattice (no relations).
CanonicalFrame canonical_polarity(const Lattice& lattice);

/// ζ1(a) = {x | a ∈ x} = Γx_a.
GaloisSet zeta1(const CanonicalFrame& cf, Element a);
/// ζ∂(a) = {y | a ∈ y} = Γy_a.
GaloisSet zeta_d(const CanonicalFrame& cf, Element a);

/// f̂(ū): the filter (output 1) or ideal (output ∂) generated by
/// {f(ā) | ā ∈ ū}. Place j takes a filter index when i_j = 1 and an ideal
/// index when i_j = ∂. Throws Error(sort_mismatch).
Point hat_point_operator(const CanonicalFrame& cf, const NormalOperator& f, std::span<const Point> u);

/// The relation with zRū iff f̂(ū) ⊆ z, of sort type (i_{n+1}; i_1 ... i_n).
SortedRelation canonical_relation(const CanonicalFrame& cf, const NormalOperator& f);

/// Separation, sections as closed elements, per-place monotonicity, the two
/// descriptions of the Galois dual and section stability, for every relation.
Report verify_canonical_lemmas(const CanonicalFrame& cf);

/// ζ1 as an isomorphism of L onto 𝒢(X): bijective, order both ways, meets,
/// joins and bounds, (ζ1 a)′ = ζ∂ a and ζ1 a clopen with witness y_a.
Report zeta_isomorphism_check(const CanonicalFrame& cf);

struct Representation {
  /// ᾱ_f on 𝒢(X) indices, ∂-places and a ∂ output dualized through the polars.
  NormalOperator represented;
  /// ζ_out(f(ā)) = ᾱ_R(ζ_{i_1} a_1, ..., ζ_{i_n} a_n) for every tuple ā.
  Report report;
};

/// Throws Error(lemma_precondition_failed) when the canonical lemmas fail.
Representation represent_operator(const CanonicalFrame& cf, const NormalOperator& f);

/// The identity checks of represent_operator for all operators plus the
/// isomorphism of (𝒢(X), represented operators) with the source via ζ1.
Report representation_check(const CanonicalFrame& cf);

/// f_σ(Γu_1, ..., Γu_n) = ⋂{ζ_out(f(ā)) | ā ∈ ū}. Each argument must be a
/// closed element of sort i_j; throws Error(not_closed_element) otherwise.
GaloisSet sigma_extension(const CanonicalFrame& cf, const NormalOperator& f, std::span<const GaloisSet> closed);
/// f^σ(F̄): the join of f_σ over the closed elements below a stable tuple.
GaloisSet sigma_extension_stable(const CanonicalFrame& cf, const NormalOperator& f,
                                 std::span<const GaloisSet> stable);
/// f_π({v_1}′, ..., {v_n}′) = ⋁{ζ_out(f(ā)) | a_j ∈ v_j}. Each argument must be
/// an open element of sort i_j; throws Error(not_closed_element) otherwise.
GaloisSet pi_extension(const CanonicalFrame& cf, const NormalOperator& f, std::span<const GaloisSet> open);

/// f_σ(Γū) = Γ(f̂ū) on closed tuples, f^σ = ᾱ_R on stable tuples, and f_π as
/// the polar of the σ-extension over the opposite sorts.
Report extension_check(const CanonicalFrame& cf);

/// Density of the ζ1-image, compactness, closed elements as meets and open
/// elements as joins of ζ1-images, clopen elements as exactly the ζ1-image.
Report canonical_extension_check(const CanonicalFrame& cf);

}  // namespace polaritykit

#endif  // POLARITYKIT_CANONICAL_FRAME_HPP_
