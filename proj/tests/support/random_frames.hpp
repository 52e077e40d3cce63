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

// Seeded generators for the property tests. Kept separate from the library's
// own generators so the tests do not depend on them.
#ifndef POLARITYKIT_TESTS_RANDOM_FRAMES_HPP_
#define POLARITYKIT_TESTS_RANDOM_FRAMES_HPP_

#include <cstddef>
#include <memory>
#include <random>
#include <utility>
#include <vector>

#include "polaritykit/polarity.hpp"
#include "polaritykit/sorted_relation.hpp"

namespace testing {

inline double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

inline std::size_t below(std::mt19937_64& rng, std::size_t n) { return static_cast<std::size_t>(rng() % n); }

inline polaritykit::Polarity random_polarity(std::mt19937_64& rng, std::size_t nx, std::size_t ny,
                                              double density) {
  std::vector<std::pair<polaritykit::Point, polaritykit::Point>> pairs;
  for (std::size_t x = 0; x < nx; ++x) {
    for (std::size_t y = 0; y < ny; ++y) {
      if (unit(rng) < density) pairs.emplace_back(x, y);
    }
  }
  return polaritykit::Polarity(nx, ny, pairs);
}

/// Sizes in [1, max] and a density in [0.2, 0.8].
inline polaritykit::Polarity random_polarity(std::mt19937_64& rng, std::size_t max) {
  const std::size_t nx = 1 + below(rng, max);
  const std::size_t ny = 1 + below(rng, max);
  return random_polarity(rng, nx, ny, 0.2 + 0.6 * unit(rng));
}

inline polaritykit::SortedRelation random_relation(std::mt19937_64& rng,
                                                    std::shared_ptr<const polaritykit::Polarity> p,
                                                    const polaritykit::SortType& type, double density) {
  std::vector<std::size_t> radices{p->carrier_size(type.out)};
  for (polaritykit::Sort s : type.args) radices.push_back(p->carrier_size(s));
  std::vector<std::vector<polaritykit::Point>> tuples;
  std::vector<polaritykit::Point> t(radices.size(), 0);
  while (true) {
    if (unit(rng) < density) tuples.push_back(t);
    std::size_t j = t.size();
    while (j > 0 && ++t[j - 1] == radices[j - 1]) t[--j] = 0;
    if (j == 0) break;
  }
  return polaritykit::SortedRelation::from_tuples(std::move(p), type, tuples);
}

/// A random relation of the given sort type whose Galois dual has Galois
/// sections and is not total, by rejection.
inline polaritykit::SortedRelation random_stable_relation(std::mt19937_64& rng,
                                                           std::shared_ptr<const polaritykit::Polarity> p,
                                                           const polaritykit::SortType& type) {
  const polaritykit::SortedRelation empty(p, type);
  const auto total = polaritykit::galois_dual(empty);
  for (int attempt = 0; attempt < 2000; ++attempt) {
    auto r = random_relation(rng, p, type, 0.1 + 0.4 * unit(rng));
    if (polaritykit::sections_all_stable(r).stable && polaritykit::galois_dual(r) != total) return r;
  }
  return empty;
}

inline polaritykit::SortType random_sort_type(std::mt19937_64& rng, std::size_t max_arity) {
  polaritykit::SortType t;
  t.out = (rng() & 1U) ? polaritykit::Sort::one : polaritykit::Sort::dual;
  const std::size_t n = 1 + below(rng, max_arity);
  for (std::size_t j = 0; j < n; ++j) t.args.push_back((rng() & 1U) ? polaritykit::Sort::one : polaritykit::Sort::dual);
  return t;
}

}  // namespace testing

#endif  // POLARITYKIT_TESTS_RANDOM_FRAMES_HPP_
