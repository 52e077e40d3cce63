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

#include "polaritykit/polarity.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "polaritykit/error.hpp"

namespace polaritykit {

namespace {

constexpr std::size_t kPowersetLimit = 12;

std::string point_text(ZPoint p) {
  return (p.sort == Sort::one ? "x" : "y") + std::to_string(p.index);
}

}  // namespace

Polarity::Polarity(std::size_t nx, std::size_t ny, std::span<const std::pair<Point, Point>> incidence) {
  if (nx > Subset::kMaxCarrier || ny > Subset::kMaxCarrier) {
    throw Error(Errc::bad_size, "polarity carriers are limited to 64 points");
  }
  rows_.assign(nx, Subset{});
  cols_.assign(ny, Subset{});
  for (auto [x, y] : incidence) {
    if (x >= nx || y >= ny) {
      throw Error(Errc::index_out_of_range,
                  "incidence pair (" + std::to_string(x) + ", " + std::to_string(y) + ") out of range");
    }
    rows_[x].insert(y);
    cols_[y].insert(x);
  }
}

Polarity Polarity::from_rows(std::size_t ny, std::vector<Subset> rows) {
  if (rows.size() > Subset::kMaxCarrier || ny > Subset::kMaxCarrier) {
    throw Error(Errc::bad_size, "polarity carriers are limited to 64 points");
  }
  Polarity p;
  p.cols_.assign(ny, Subset{});
  for (Point x = 0; x < rows.size(); ++x) {
    if (!rows[x].subset_of(Subset::full(ny))) {
      throw Error(Errc::index_out_of_range, "row " + std::to_string(x) + " mentions a point outside Y");
    }
    rows[x].for_each([&](std::size_t y) { p.cols_[y].insert(x); });
  }
  p.rows_ = std::move(rows);
  return p;
}

Subset Polarity::polar_right(Subset u) const {
  Subset out;
  for (Point y = 0; y < cols_.size(); ++y) {
    if (u.subset_of(cols_[y])) out.insert(y);
  }
  return out;
}

Subset Polarity::polar_left(Subset v) const {
  Subset out;
  for (Point x = 0; x < rows_.size(); ++x) {
    if (v.subset_of(rows_[x])) out.insert(x);
  }
  return out;
}

std::vector<std::pair<Point, Point>> Polarity::incidence_pairs() const {
  std::vector<std::pair<Point, Point>> out;
  for (Point x = 0; x < rows_.size(); ++x) {
    rows_[x].for_each([&](std::size_t y) { out.emplace_back(x, y); });
  }
  return out;
}

bool is_galois(const Polarity& p, const GaloisSet& g) {
  return g.members.subset_of(p.carrier(g.sort)) && p.double_polar(g.sort, g.members) == g.members;
}

GaloisSet prime(const Polarity& p, const GaloisSet& g) {
  return GaloisSet{bar(g.sort), p.polar(g.sort, g.members)};
}

GaloisSet closure(const Polarity& p, Subset u, Sort s) {
  if (!u.subset_of(p.carrier(s))) {
    throw Error(Errc::index_out_of_range, "subset " + to_text(u) + " exceeds a carrier of size " +
                                              std::to_string(p.carrier_size(s)));
  }
  return GaloisSet{s, p.double_polar(s, u)};
}

StableLattice::StableLattice(Polarity polarity, Sort sort, std::vector<Subset> sets)
    : polarity_(std::move(polarity)), sort_(sort), sets_(std::move(sets)) {}

std::optional<std::size_t> StableLattice::index_of(Subset s) const {
  auto it = std::lower_bound(sets_.begin(), sets_.end(), s);
  if (it == sets_.end() || *it != s) return std::nullopt;
  return static_cast<std::size_t>(it - sets_.begin());
}

std::size_t StableLattice::require_index(Subset s) const {
  auto i = index_of(s);
  if (!i) throw Error(Errc::not_galois, to_text(s) + " is not a Galois set of sort " + std::string(glyph(sort_)));
  return *i;
}

std::size_t StableLattice::meet(std::size_t a, std::size_t b) const {
  return require_index(sets_[a] & sets_[b]);
}

std::size_t StableLattice::join(std::size_t a, std::size_t b) const {
  return require_index(polarity_.double_polar(sort_, sets_[a] | sets_[b]));
}

Lattice StableLattice::as_lattice() const {
  std::vector<std::pair<Element, Element>> pairs;
  for (std::size_t a = 0; a < sets_.size(); ++a) {
    for (std::size_t b = 0; b < sets_.size(); ++b) {
      if (a != b && leq(a, b)) pairs.emplace_back(a, b);
    }
  }
  return build_lattice(sets_.size(), pairs);
}

StableLattice all_stable_sets(const Polarity& p, Sort s, StableEnumeration method) {
  const std::size_t n = p.carrier_size(s);
  if (method == StableEnumeration::automatic) {
    method = n <= kPowersetLimit ? StableEnumeration::powerset : StableEnumeration::intersection_closure;
  }
  std::vector<Subset> sets;
  if (method == StableEnumeration::powerset) {
    if (n > 20) throw Error(Errc::guard_exceeded, "powerset scan over more than 20 points");
    for (Subset::Mask m = 0; m < (Subset::Mask{1} << n); ++m) {
      if (p.double_polar(s, Subset(m)) == Subset(m)) sets.emplace_back(m);
    }
  } else {
    // Every Galois set is an intersection of the open elements {v}′ above it.
    std::set<Subset> family{p.carrier(s)};
    for (Point v = 0; v < p.carrier_size(bar(s)); ++v) {
      const Subset open = p.neighbours(bar(s), v);
      std::vector<Subset> fresh;
      for (Subset f : family) fresh.push_back(f & open);
      family.insert(fresh.begin(), fresh.end());
    }
    sets.assign(family.begin(), family.end());
  }
  return StableLattice(p, s, std::move(sets));
}

std::vector<Subset> preorder(const Polarity& p, Sort s) {
  const std::size_t n = p.carrier_size(s);
  std::vector<Subset> up(n);
  for (Point u = 0; u < n; ++u) {
    for (Point z = 0; z < n; ++z) {
      if (p.neighbours(s, u).subset_of(p.neighbours(s, z))) up[u].insert(z);
    }
  }
  return up;
}

bool is_separated(const Polarity& p) {
  for (Sort s : {Sort::one, Sort::dual}) {
    auto up = preorder(p, s);
    for (Point u = 0; u < up.size(); ++u) {
      bool clash = false;
      up[u].for_each([&](std::size_t z) {
        if (z != u && up[z].contains(u)) clash = true;
      });
      if (clash) return false;
    }
  }
  return true;
}

ZOrder z_order(const Polarity& p) {
  if (!is_separated(p)) throw Error(Errc::not_separated, "the Z order needs a separated frame");
  ZOrder order(p.nx(), p.ny());
  for (Point x = 0; x < p.nx(); ++x) {
    for (Point y = 0; y < p.ny(); ++y) {
      if (p.incident(x, y)) order.set({Sort::one, x}, {Sort::dual, y});
    }
    for (Point z = 0; z < p.nx(); ++z) {
      // x ⩽ z iff z ≤ x in the frame order.
      if (p.row(z).subset_of(p.row(x))) order.set({Sort::one, x}, {Sort::one, z});
    }
  }
  for (Point y = 0; y < p.ny(); ++y) {
    for (Point v = 0; v < p.ny(); ++v) {
      if (p.column(y).subset_of(p.column(v))) order.set({Sort::dual, y}, {Sort::dual, v});
    }
    for (Point x = 0; x < p.nx(); ++x) {
      // ∀u∈X ∀w∈Y (u ⊩ y ∧ x ⊩ w → u ⊩ w)
      bool ok = true;
      p.column(y).for_each([&](std::size_t u) {
        if (!p.row(x).subset_of(p.row(u))) ok = false;
      });
      if (ok) order.set({Sort::dual, y}, {Sort::one, x});
    }
  }
  return order;
}

std::vector<ZPoint> ZOrder::points() const {
  std::vector<ZPoint> out;
  for (Point x = 0; x < nx_; ++x) out.push_back({Sort::one, x});
  for (Point y = 0; y < ny_; ++y) out.push_back({Sort::dual, y});
  return out;
}

bool ZOrder::reflexive() const {
  for (ZPoint a : points()) {
    if (!leq(a, a)) return false;
  }
  return true;
}

bool ZOrder::transitive() const {
  const auto pts = points();
  for (ZPoint a : pts) {
    for (ZPoint b : pts) {
      if (!leq(a, b)) continue;
      for (ZPoint c : pts) {
        if (leq(b, c) && !leq(a, c)) return false;
      }
    }
  }
  return true;
}

bool ZOrder::antisymmetric_within_sorts() const {
  const auto pts = points();
  for (ZPoint a : pts) {
    for (ZPoint b : pts) {
      if (a.sort == b.sort && a != b && leq(a, b) && leq(b, a)) return false;
    }
  }
  return true;
}

bool is_reduced(const Polarity& p) {
  const ZOrder order = z_order(p);
  for (Point x = 0; x < p.nx(); ++x) {
    bool found = false;
    for (Point y = 0; y < p.ny() && !found; ++y) {
      if (order.leq({Sort::one, x}, {Sort::dual, y})) continue;
      bool all_below_hit = true;
      for (Point z = 0; z < p.nx(); ++z) {
        if (z != x && order.leq({Sort::one, z}, {Sort::one, x}) && !order.leq({Sort::one, z}, {Sort::dual, y})) {
          all_below_hit = false;
        }
      }
      found = all_below_hit;
    }
    if (!found) return false;
  }
  for (Point y = 0; y < p.ny(); ++y) {
    bool found = false;
    for (Point x = 0; x < p.nx() && !found; ++x) {
      if (order.leq({Sort::one, x}, {Sort::dual, y})) continue;
      bool all_above_hit = true;
      for (Point v = 0; v < p.ny(); ++v) {
        if (v != y && order.leq({Sort::dual, y}, {Sort::dual, v}) && !order.leq({Sort::one, x}, {Sort::dual, v})) {
          all_above_hit = false;
        }
      }
      found = all_above_hit;
    }
    if (!found) return false;
  }
  return true;
}

Subset z_embedding(const Polarity& p, ZPoint u) {
  if (u.sort == Sort::one) return p.double_polar(Sort::one, Subset::singleton(u.index));
  return p.column(u.index);
}

Report dm_completion_check(const Polarity& p) {
  if (!is_separated(p)) throw Error(Errc::not_separated, "the completion check needs a separated frame");
  Report report("dm-completion");
  const StableLattice stable = all_stable_sets(p, Sort::one);
  report.detail = std::to_string(stable.size()) + " stable sets";

  const ZOrder order = z_order(p);
  Report z("z-order-is-partial");
  if (!order.reflexive()) z.fail("not reflexive");
  if (!order.transitive()) z.fail("not transitive");
  if (!order.antisymmetric_within_sorts()) z.fail("not antisymmetric within a sort");
  report.add(std::move(z));

  const Subset all_x = p.carrier(Sort::one);
  Report joins("join-of-closed-elements");
  Report meets("meet-of-open-elements");
  for (Subset g : stable.sets()) {
    Subset union_of_closed;
    g.for_each([&](std::size_t x) { union_of_closed |= p.double_polar(Sort::one, Subset::singleton(x)); });
    if (union_of_closed != g || p.double_polar(Sort::one, union_of_closed) != g) {
      joins.fail(to_text(g) + " differs from the join of its closed elements " + to_text(union_of_closed));
    }
    Subset meet_of_open = all_x;
    p.polar_right(g).for_each([&](std::size_t y) { meet_of_open &= p.column(y); });
    if (meet_of_open != g) {
      meets.fail(to_text(g) + " differs from the meet of open elements above it " + to_text(meet_of_open));
    }
  }
  report.add(std::move(joins));
  report.add(std::move(meets));

  Report embedding("order-embedding");
  const auto pts = order.points();
  for (ZPoint a : pts) {
    for (ZPoint b : pts) {
      const bool by_order = order.leq(a, b);
      const bool by_sets = z_embedding(p, a).subset_of(z_embedding(p, b));
      if (by_order != by_sets) {
        embedding.fail(point_text(a) + " <= " + point_text(b) + " is " + (by_order ? "true" : "false") +
                       " in Z but " + (by_sets ? "true" : "false") + " in the stable lattice");
      }
    }
  }
  report.add(std::move(embedding));

  Report join_dense("join-dense-from-X");
  Report meet_dense("meet-dense-from-Y");
  for (Subset g : stable.sets()) {
    Subset below;
    for (Point x = 0; x < p.nx(); ++x) {
      Subset e = z_embedding(p, {Sort::one, x});
      if (e.subset_of(g)) below |= e;
    }
    if (p.double_polar(Sort::one, below) != g) join_dense.fail(to_text(g) + " is not a join of images of X");
    Subset above = all_x;
    for (Point y = 0; y < p.ny(); ++y) {
      Subset e = z_embedding(p, {Sort::dual, y});
      if (g.subset_of(e)) above &= e;
    }
    if (above != g) meet_dense.fail(to_text(g) + " is not a meet of images of Y");
  }
  report.add(std::move(join_dense));
  report.add(std::move(meet_dense));
  return report;
}

GaloisSet closed_element(const Polarity& p, Sort s, Point u) {
  if (u >= p.carrier_size(s)) throw Error(Errc::index_out_of_range, "point " + std::to_string(u) + " out of range");
  return GaloisSet{s, p.double_polar(s, Subset::singleton(u))};
}

GaloisSet open_element(const Polarity& p, Sort s, Point v) {
  if (v >= p.carrier_size(s)) throw Error(Errc::index_out_of_range, "point " + std::to_string(v) + " out of range");
  return GaloisSet{bar(s), p.neighbours(s, v)};
}

std::optional<Point> clopen_witness(const Polarity& p, Sort s, Point u) {
  const GaloisSet gamma = closed_element(p, s, u);
  std::optional<Point> witness;
  p.neighbours(s, u).for_each([&](std::size_t v) {
    if (!witness && p.neighbours(bar(s), v) == gamma.members) witness = v;
  });
  return witness;
}

bool is_clopen(const Polarity& p, const GaloisSet& g) {
  bool clopen = false;
  g.members.for_each([&](std::size_t u) {
    if (!clopen && closed_element(p, g.sort, u) == g && clopen_witness(p, g.sort, u)) clopen = true;
  });
  return clopen;
}

}  // namespace polaritykit
