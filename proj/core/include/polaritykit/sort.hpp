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

#ifndef POLARITYKIT_SORT_HPP_
#define POLARITYKIT_SORT_HPP_

#include <string>
#include <string_view>
#include <vector>

namespace polaritykit {

/// The two sorts {1, ∂}. Sort::one names X (and the lattice itself), Sort::dual
/// names Y (and the order dual).
enum class Sort { one, dual };

constexpr Sort bar(Sort s) { return s == Sort::one ? Sort::dual : Sort::one; }

/// "1" or "d". The ∂ glyph is accepted on input but never emitted.
constexpr std::string_view glyph(Sort s) { return s == Sort::one ? "1" : "d"; }

/// Splits a string of sort glyphs ("1", "d", "∂", optionally separated by
/// spaces or commas) into sorts. Throws Error(sort_mismatch) on a bad glyph.
std::vector<Sort> parse_sorts(std::string_view text);

std::string sorts_to_string(const std::vector<Sort>& sorts, std::string_view sep = " ");

}  // namespace polaritykit

#endif  // POLARITYKIT_SORT_HPP_
