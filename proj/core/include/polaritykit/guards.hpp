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

#ifndef POLARITYKIT_GUARDS_HPP_
#define POLARITYKIT_GUARDS_HPP_

#include <cstddef>
#include <string_view>

namespace polaritykit {

/// Size limits for the exhaustive checks.
///
/// family:  largest stable lattice whose full powerset of families is
///          enumerated by the complete-additivity check (cost 2^family).
/// lattice: largest lattice accepted by the canonical frame builder when the
///          expansion carries operators (point operators iterate |L|^(2n)).
/// arity:   largest operator arity accepted by the canonical frame builder.
struct Guards {
  std::size_t family = 12;
  std::size_t lattice = 8;
  std::size_t arity = 3;
};

/// Parses "N" (sets family) or a comma list like "family=14,lattice=10".
/// Unknown keys or malformed numbers throw Error(parse_error).
Guards parse_guards(std::string_view text, Guards base = {});

/// Defaults overridden by the POLARITYKIT_GUARD environment variable, read once.
const Guards& default_guards();

}  // namespace polaritykit

#endif  // POLARITYKIT_GUARDS_HPP_
