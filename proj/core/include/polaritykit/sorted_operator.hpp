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

#ifndef POLARITYKIT_SORTED_OPERATOR_HPP_
#define POLARITYKIT_SORTED_OPERATOR_HPP_

#include <array>
#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "polaritykit/guards.hpp"
#include "polaritykit/polarity.hpp"

namespace polaritykit {

/// 𝒢(X) and 𝒢(Y) of one polarity.
class GaloisLattices {
 public:
  explicit GaloisLattices(const Polarity& p)
      : polarity_(p), lattices_{all_stable_sets(p, Sort::one), all_stable_sets(p, Sort::dual)} {}

  const Polarity& polarity() const { return polarity_; }
  const StableLattice& of(Sort s) const { return lattices_[s == Sort::one ? 0 : 1]; }

 private:
  Polarity polarity_;
  std::array<StableLattice, 2> lattices_;
};

/// A total operator on Galois sets, stored as a table from tuples of Galois
/// set indices (argument sorts, row-major) to an index in the output lattice.
class SortedOperator {
 public:
  SortedOperator(std::shared_ptr<const GaloisLattices> lattices, std::vector<Sort> args, Sort out,
                 std::vector<std::size_t> table);

  const std::vector<Sort>& args() const { return args_; }
  Sort out() const { return out_; }
  std::size_t arity() const { return args_.size(); }
  const GaloisLattices& lattices() const { return *lattices_; }
  const std::shared_ptr<const GaloisLattices>& lattices_ptr() const { return lattices_; }
  const StableLattice& lattice(Sort s) const { return lattices_->of(s); }
  /// Sizes of the argument lattices.
  const std::vector<std::size_t>& radices() const { return radices_; }
  const std::vector<std::size_t>& table() const { return table_; }

  std::size_t operator()(std::span<const std::size_t> indices) const;
  /// Throws Error(sort_mismatch) or Error(not_galois).
  GaloisSet apply(std::span<const GaloisSet> args) const;

  friend bool operator==(const SortedOperator& a, const SortedOperator& b) {
    return a.args_ == b.args_ && a.out_ == b.out_ && a.table_ == b.table_ &&
           a.lattices_->polarity() == b.lattices_->polarity();
  }

 private:
  std::shared_ptr<const GaloisLattices> lattices_;
  std::vector<Sort> args_;
  Sort out_;
  std::vector<std::size_t> radices_;
  std::vector<std::size_t> table_;
};

/// γ^k(F̄[K]_k) = ⋂{E ∈ 𝒢(Z_{bar(i_k)}) | f(F̄[E′]_k) ⊆ K′}. Place k of the
/// result takes sort bar(out) and the output has sort bar(i_k).
SortedOperator conjugate_of(const SortedOperator& f, std::size_t k);

/// β^k(F̄[G]_k) = ⋁{H ∈ 𝒢(Z_{i_k}) | f(F̄[H]_k) ⊆ G}. Place k of the result
/// takes sort out and the output has sort i_k.
SortedOperator residual_of(const SortedOperator& f, std::size_t k);

struct AdditivityReport {
  bool holds = true;
  std::string witness;
};

/// f(F̄[⋁_i G_i]_k) = ⋁_i f(F̄[G_i]_k) over all 2^|𝒢| families at place k and
/// all contexts. Throws Error(guard_exceeded) above `guard` Galois sets.
AdditivityReport completely_additive(const SortedOperator& f, std::size_t k,
                                     std::size_t guard = default_guards().family);

/// f(F̄) ⊆ G iff g(F̄[G′]_k) ⊆ F′_k for all Galois F̄ and G.
bool conjugacy_law(const SortedOperator& f, const SortedOperator& g, std::size_t k);

/// f(F̄[H]_k) ⊆ G iff H ⊆ b(F̄[G]_k) for all Galois F̄, H and G.
bool residuation_law(const SortedOperator& f, const SortedOperator& b, std::size_t k);

}  // namespace polaritykit

#endif  // POLARITYKIT_SORTED_OPERATOR_HPP_
