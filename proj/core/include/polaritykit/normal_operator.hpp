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

#ifndef POLARITYKIT_NORMAL_OPERATOR_HPP_
#define POLARITYKIT_NORMAL_OPERATOR_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "polaritykit/lattice.hpp"
#include "polaritykit/sort.hpp"

namespace polaritykit {

/// δ(f) = (i_1, ..., i_n; i_{n+1}).
struct DistributionType {
  std::vector<Sort> args;
  Sort out = Sort::one;

  std::size_t arity() const { return args.size(); }

  /// "(1,d;d)"; parse accepts the same with or without parentheses, and ∂.
  std::string to_string() const;
  static DistributionType parse(std::string_view text);

  friend bool operator==(const DistributionType&, const DistributionType&) = default;
};

/// A total n-ary operation on a lattice, stored as a row-major table over
/// lexicographically ordered argument tuples.
class NormalOperator {
 public:
  /// Throws Error(arity_mismatch) unless table.size() == lattice_size^n, and
  /// Error(index_out_of_range) for table values outside the lattice.
  NormalOperator(std::string name, DistributionType dtype, std::size_t lattice_size,
                 std::vector<Element> table);

  const std::string& name() const { return name_; }
  const DistributionType& dtype() const { return dtype_; }
  std::size_t arity() const { return dtype_.arity(); }
  std::size_t lattice_size() const { return lattice_size_; }
  const std::vector<Element>& table() const { return table_; }

  Element operator()(std::span<const Element> args) const;

  friend bool operator==(const NormalOperator&, const NormalOperator&) = default;

 private:
  std::string name_;
  DistributionType dtype_;
  std::size_t lattice_size_;
  std::vector<Element> table_;
};

struct PlaceCheck {
  std::size_t place = 0;  // 0-based
  bool distributes = true;
  bool normal = true;
  std::string counterexample;  // empty when the place passes

  bool passed() const { return distributes && normal; }
};

struct ValidationReport {
  bool accepted = true;
  std::vector<PlaceCheck> places;

  /// First failing place, if any.
  std::optional<PlaceCheck> first_failure() const;
};

/// Checks, place by place, that op distributes over binary joins of L^{i_j}
/// into joins of L^{i_{n+1}} and sends the bottom of L^{i_j} to the bottom of
/// L^{i_{n+1}}. Throws Error(arity_mismatch) if op was built for a lattice of
/// a different size.
ValidationReport validate_normal_operator(const Lattice& lattice, const NormalOperator& op);

struct LatticeExpansion {
  Lattice lattice;
  std::vector<NormalOperator> operators;
  /// Optional display names for elements; empty means "use indices".
  std::vector<std::string> element_names;

  const NormalOperator* find(std::string_view name) const;
  std::string element_name(Element e) const;
};

/// Validates every operator. Throws Error(validation_error) naming the operator
/// and failing place on the first rejection, Error(bad_size) when the name
/// list has the wrong length.
LatticeExpansion make_expansion(Lattice lattice, std::vector<NormalOperator> operators,
                                std::vector<std::string> element_names = {});

enum class ChainKind { godel, lukasiewicz };

/// n-element FL_ew chain with product "o" of type (1,1;1) and residuum "->"
/// of type (1,d;d). Throws Error(bad_size) for n < 2.
LatticeExpansion make_flew_chain(std::size_t n, ChainKind kind);

/// n-element chain with the order-reversing involution, registered twice: as
/// "neg" of type (1;d) and "negd" of type (d;1). Throws Error(bad_size) for n < 2.
LatticeExpansion make_de_morgan_chain(std::size_t n);

/// Four-element Boolean lattice with complement under both distribution types.
LatticeExpansion make_boolean_negation();

}  // namespace polaritykit

#endif  // POLARITYKIT_NORMAL_OPERATOR_HPP_
