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

#ifndef POLARITYKIT_TUPLES_HPP_
#define POLARITYKIT_TUPLES_HPP_

#include <cstddef>
#include <span>
#include <vector>

namespace polaritykit {

/// Product of the radices; 1 for the empty product.
std::size_t tuple_count(std::span<const std::size_t> radices);

/// Row-major (last place fastest) index of a tuple.
std::size_t tuple_index(std::span<const std::size_t> tuple, std::span<const std::size_t> radices);

/// Inverse of tuple_index.
std::vector<std::size_t> tuple_at(std::size_t index, std::span<const std::size_t> radices);

/// Calls f(tuple) for every tuple of the mixed-radix product in lexicographic
/// order. The empty product yields exactly one (empty) tuple; a zero radix
/// yields none.
template <typename F>
void for_each_tuple(std::span<const std::size_t> radices, F&& f) {
  for (std::size_t r : radices) {
    if (r == 0) return;
  }
  std::vector<std::size_t> tuple(radices.size(), 0);
  while (true) {
    f(std::span<const std::size_t>(tuple));
    bool advanced = false;
    for (std::size_t place = radices.size(); place > 0 && !advanced;) {
      --place;
      if (++tuple[place] < radices[place]) {
        advanced = true;
      } else {
        tuple[place] = 0;
      }
    }
    if (!advanced) return;
  }
}

}  // namespace polaritykit

#endif  // POLARITYKIT_TUPLES_HPP_
