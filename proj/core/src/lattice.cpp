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

#include "polaritykit/lattice.hpp"

#include <algorithm>
#include <string>

#include "polaritykit/error.hpp"

namespace polaritykit {

namespace {

std::string pair_text(Element a, Element b) {
  return "(" + std::to_string(a) + ", " + std::to_string(b) + ")";
}

// The greatest element of `candidates` that lies above every other candidate,
// given per-element down-sets.
std::optional<Element> greatest_of(Subset candidates, const std::vector<Subset>& down) {
  std::optional<Element> found;
  candidates.for_each([&](std::size_t g) {
    if (!found && candidates.subset_of(down[g])) found = g;
  });
  return found;
}

}  // namespace

Lattice build_lattice(std::size_t size, std::span<const std::pair<Element, Element>> leq_pairs) {
  if (size == 0 || size > Subset::kMaxCarrier) {
    throw Error(Errc::bad_size, "lattice size must be in 1..64, got " + std::to_string(size));
  }
  Lattice l;
  l.size_ = size;
  l.up_.assign(size, Subset{});
  for (Element a = 0; a < size; ++a) l.up_[a].insert(a);
  for (auto [a, b] : leq_pairs) {
    if (a >= size || b >= size) {
      throw Error(Errc::index_out_of_range, "order pair " + pair_text(a, b) + " outside 0.." +
                                                std::to_string(size - 1));
    }
    l.up_[a].insert(b);
  }
  // Warshall on bit rows.
  for (Element k = 0; k < size; ++k) {
    for (Element a = 0; a < size; ++a) {
      if (l.up_[a].contains(k)) l.up_[a] |= l.up_[k];
    }
  }
  l.down_.assign(size, Subset{});
  for (Element a = 0; a < size; ++a) {
    l.up_[a].for_each([&](std::size_t b) { l.down_[b].insert(a); });
  }
  for (Element a = 0; a < size; ++a) {
    Subset both = (l.up_[a] & l.down_[a]) - Subset::singleton(a);
    if (!both.empty()) {
      throw Error(Errc::not_a_partial_order,
                  "elements " + std::to_string(a) + " and " + std::to_string(both.first()) +
                      " are mutually below each other");
    }
  }

  const Subset all = Subset::full(size);
  std::optional<Element> bottom, top;
  for (Element a = 0; a < size; ++a) {
    if (l.up_[a] == all) bottom = a;
    if (l.down_[a] == all) top = a;
  }
  if (!bottom || !top) {
    throw Error(Errc::not_bounded, !bottom ? "no least element" : "no greatest element");
  }
  l.bottom_ = *bottom;
  l.top_ = *top;

  l.meet_.assign(size * size, 0);
  l.join_.assign(size * size, 0);
  for (Element a = 0; a < size; ++a) {
    for (Element b = a; b < size; ++b) {
      auto glb = greatest_of(l.down_[a] & l.down_[b], l.down_);
      auto lub = greatest_of(l.up_[a] & l.up_[b], l.up_);  // least upper bound: "greatest" in the dual
      if (!glb) throw Error(Errc::not_a_lattice, "no meet for " + pair_text(a, b));
      if (!lub) throw Error(Errc::not_a_lattice, "no join for " + pair_text(a, b));
      l.meet_[a * size + b] = l.meet_[b * size + a] = *glb;
      l.join_[a * size + b] = l.join_[b * size + a] = *lub;
    }
  }
  return l;
}

Element Lattice::meet_all(Subset s) const {
  Element acc = top_;
  s.for_each([&](std::size_t e) { acc = meet(acc, e); });
  return acc;
}

Element Lattice::join_all(Subset s) const {
  Element acc = bottom_;
  s.for_each([&](std::size_t e) { acc = join(acc, e); });
  return acc;
}

std::vector<std::pair<Element, Element>> Lattice::covers() const {
  std::vector<std::pair<Element, Element>> out;
  for (Element a = 0; a < size_; ++a) {
    Subset strictly_above = up_[a] - Subset::singleton(a);
    strictly_above.for_each([&](std::size_t b) {
      Subset between = strictly_above & down_[b];
      if (between == Subset::singleton(b)) out.emplace_back(a, b);
    });
  }
  return out;
}

Lattice make_chain(std::size_t n) {
  std::vector<std::pair<Element, Element>> pairs;
  for (Element i = 0; i + 1 < n; ++i) pairs.emplace_back(i, i + 1);
  return build_lattice(n, pairs);
}

Lattice make_diamond(std::size_t atoms) {
  std::vector<std::pair<Element, Element>> pairs;
  for (Element a = 1; a <= atoms; ++a) {
    pairs.emplace_back(0, a);
    pairs.emplace_back(a, atoms + 1);
  }
  if (atoms == 0) pairs.emplace_back(0, 1);
  return build_lattice(atoms + 2, pairs);
}

Lattice make_pentagon() {
  // 0 = bottom, 1 = a, 2 = c, 3 = b, 4 = top.
  const std::pair<Element, Element> pairs[] = {{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}};
  return build_lattice(5, pairs);
}

Lattice make_boolean(std::size_t n) {
  const std::size_t size = std::size_t{1} << n;
  std::vector<std::pair<Element, Element>> pairs;
  for (Element a = 0; a < size; ++a) {
    for (std::size_t bit = 0; bit < n; ++bit) {
      if (((a >> bit) & 1U) == 0) pairs.emplace_back(a, a | (std::size_t{1} << bit));
    }
  }
  return build_lattice(size, pairs);
}

bool is_filter(const Lattice& l, Subset s) {
  if (s.empty() || !s.subset_of(Subset::full(l.size()))) return false;
  bool ok = true;
  s.for_each([&](std::size_t a) {
    if (!l.up(a).subset_of(s)) ok = false;
    s.for_each([&](std::size_t b) {
      if (!s.contains(l.meet(a, b))) ok = false;
    });
  });
  return ok;
}

bool is_ideal(const Lattice& l, Subset s) {
  if (s.empty() || !s.subset_of(Subset::full(l.size()))) return false;
  bool ok = true;
  s.for_each([&](std::size_t a) {
    if (!l.down(a).subset_of(s)) ok = false;
    s.for_each([&](std::size_t b) {
      if (!s.contains(l.join(a, b))) ok = false;
    });
  });
  return ok;
}

Subset generate_filter(const Lattice& l, Subset s) {
  Subset current = s.empty() ? Subset::singleton(l.top()) : s;
  while (true) {
    Subset next = current;
    current.for_each([&](std::size_t a) {
      next |= l.up(a);
      current.for_each([&](std::size_t b) { next.insert(l.meet(a, b)); });
    });
    if (next == current) return current;
    current = next;
  }
}

Subset generate_ideal(const Lattice& l, Subset s) {
  Subset current = s.empty() ? Subset::singleton(l.bottom()) : s;
  while (true) {
    Subset next = current;
    current.for_each([&](std::size_t a) {
      next |= l.down(a);
      current.for_each([&](std::size_t b) { next.insert(l.join(a, b)); });
    });
    if (next == current) return current;
    current = next;
  }
}

// Finite lattices have only principal filters and ideals, so enumeration is
// the image of ↑ / ↓ sorted by mask. Tests compare against a powerset scan.
std::vector<Subset> enumerate_filters(const Lattice& l) {
  std::vector<Subset> out;
  for (Element a = 0; a < l.size(); ++a) out.push_back(l.up(a));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Subset> enumerate_ideals(const Lattice& l) {
  std::vector<Subset> out;
  for (Element a = 0; a < l.size(); ++a) out.push_back(l.down(a));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace polaritykit
