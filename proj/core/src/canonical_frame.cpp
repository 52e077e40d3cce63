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

#include "polaritykit/canonical_frame.hpp"

#include <algorithm>
#include <set>

#include "polaritykit/error.hpp"
#include "polaritykit/tuples.hpp"

namespace polaritykit {

namespace {

std::string elements_text(const LatticeExpansion& l, std::span<const Element> t) {
  std::string out = "(";
  for (std::size_t i = 0; i < t.size(); ++i) out += (i ? "," : "") + l.element_name(t[i]);
  return out + ")";
}

void require_operator(const CanonicalFrame& cf, const NormalOperator& f) {
  if (f.lattice_size() != cf.lattice().size()) {
    throw Error(Errc::arity_mismatch, "operator '" + f.name() + "' was built for a lattice of size " +
                                          std::to_string(f.lattice_size()));
  }
}

/// Calls g(ā) for every ā in the product of the element sets.
template <typename G>
void for_each_element_tuple(std::span<const Subset> sets, G&& g) {
  const std::size_t n = sets.size();
  std::vector<std::vector<Element>> members(n);
  std::vector<std::size_t> sizes(n);
  for (std::size_t j = 0; j < n; ++j) {
    members[j] = sets[j].members();
    sizes[j] = members[j].size();
  }
  std::vector<Element> a(n);
  for_each_tuple(sizes, [&](std::span<const std::size_t> t) {
    for (std::size_t j = 0; j < n; ++j) a[j] = members[j][t[j]];
    g(std::span<const Element>(a));
  });
}

/// {f(ā) | ā ∈ sets}.
Subset image_set(const NormalOperator& f, std::span<const Subset> sets) {
  Subset out;
  for_each_element_tuple(sets, [&](std::span<const Element> a) { out.insert(f(a)); });
  return out;
}

std::vector<Subset> argument_sets(const CanonicalFrame& cf, const NormalOperator& f, std::span<const Point> u) {
  const auto& args = f.dtype().args;
  if (u.size() != args.size()) {
    throw Error(Errc::sort_mismatch, "operator '" + f.name() + "' takes " + std::to_string(args.size()) +
                                         " points, got " + std::to_string(u.size()));
  }
  std::vector<Subset> sets(u.size());
  for (std::size_t j = 0; j < u.size(); ++j) {
    if (u[j] >= cf.polarity().carrier_size(args[j])) {
      throw Error(Errc::sort_mismatch, "place " + std::to_string(j + 1) + " of '" + f.name() + "' needs " +
                                           (args[j] == Sort::one ? "a filter" : "an ideal") + ", got index " +
                                           std::to_string(u[j]));
    }
    sets[j] = cf.point_set(args[j], u[j]);
  }
  return sets;
}

GaloisSet zeta(const CanonicalFrame& cf, Sort s, Element a) {
  const auto& points = s == Sort::one ? cf.filters() : cf.ideals();
  Subset out;
  for (Point p = 0; p < points.size(); ++p) {
    if (points[p].contains(a)) out.insert(p);
  }
  return GaloisSet{s, out};
}

std::vector<std::size_t> carrier_radices(const Polarity& p, std::span<const Sort> sorts) {
  std::vector<std::size_t> r;
  for (Sort s : sorts) r.push_back(p.carrier_size(s));
  return r;
}

std::string points_text(const CanonicalFrame& cf, std::span<const Sort> sorts, std::span<const std::size_t> u) {
  std::string out = "(";
  for (std::size_t j = 0; j < u.size(); ++j) out += (j ? "," : "") + cf.point_name(sorts[j], u[j]);
  return out + ")";
}

/// f_σ at a tuple of points: ⋂{ζ_out(f(ā)) | ā ∈ ū}.
Subset sigma_at(const CanonicalFrame& cf, const NormalOperator& f, std::span<const Subset> sets) {
  const Sort out = f.dtype().out;
  Subset meet = cf.polarity().carrier(out);
  for_each_element_tuple(sets, [&](std::span<const Element> a) { meet &= zeta(cf, out, f(a)).members; });
  return meet;
}

/// f_π at a tuple of opposite-sort points: ⋁{ζ_out(f(ā)) | a_j ∈ v_j}.
Subset pi_at(const CanonicalFrame& cf, const NormalOperator& f, std::span<const Subset> sets) {
  const Sort out = f.dtype().out;
  Subset join;
  for_each_element_tuple(sets, [&](std::span<const Element> a) { join |= zeta(cf, out, f(a)).members; });
  return cf.polarity().double_polar(out, join);
}

Point find_closed(const Polarity& p, const std::vector<Subset>& up, const GaloisSet& g) {
  for (Point u = 0; u < up.size(); ++u) {
    if (up[u] == g.members) return u;
  }
  throw Error(Errc::not_closed_element, to_text(g.members) + " is not a closed element of sort " +
                                            std::string(glyph(g.sort)) + " over " +
                                            std::to_string(p.carrier_size(g.sort)) + " points");
}

Point find_open(const Polarity& p, const GaloisSet& g) {
  const Sort other = bar(g.sort);
  for (Point v = 0; v < p.carrier_size(other); ++v) {
    if (p.neighbours(other, v) == g.members) return v;
  }
  throw Error(Errc::not_closed_element, to_text(g.members) + " is not an open element of sort " +
                                            std::string(glyph(g.sort)));
}

void require_sorts(const NormalOperator& f, std::span<const GaloisSet> g) {
  const auto& args = f.dtype().args;
  if (g.size() != args.size()) {
    throw Error(Errc::sort_mismatch, "operator '" + f.name() + "' takes " + std::to_string(args.size()) +
                                         " arguments, got " + std::to_string(g.size()));
  }
  for (std::size_t j = 0; j < g.size(); ++j) {
    if (g[j].sort != args[j]) {
      throw Error(Errc::sort_mismatch, "place " + std::to_string(j + 1) + " of '" + f.name() + "' has sort " +
                                           std::string(glyph(args[j])));
    }
  }
}

/// Closes a family under a binary operation.
template <typename Op>
std::set<Subset> close_under(std::set<Subset> family, Op op) {
  bool grown = true;
  while (grown) {
    grown = false;
    const std::vector<Subset> current(family.begin(), family.end());
    for (std::size_t i = 0; i < current.size(); ++i) {
      for (std::size_t j = i + 1; j < current.size(); ++j) {
        if (family.insert(op(current[i], current[j])).second) grown = true;
      }
    }
  }
  return family;
}

}  // namespace

std::optional<Point> CanonicalFrame::index_of(Sort s, Subset set) const {
  const auto& points = points_[s == Sort::one ? 0 : 1];
  auto it = std::lower_bound(points.begin(), points.end(), set);
  if (it == points.end() || *it != set) return std::nullopt;
  return static_cast<Point>(it - points.begin());
}

std::string CanonicalFrame::point_name(Sort s, Point p) const {
  const Subset set = point_set(s, p);
  const Element generator = s == Sort::one ? lattice().meet_all(set) : lattice().join_all(set);
  return (s == Sort::one ? "F_" : "I_") + source_.element_name(generator);
}

const SortedRelation& CanonicalFrame::relation(std::string_view name) const {
  for (const auto& r : relations_) {
    if (r.name() == name) return r;
  }
  throw Error(Errc::index_out_of_range, "no relation named '" + std::string(name) + "'");
}

CanonicalFrame build_canonical_frame(LatticeExpansion source, const Guards& guards) {
  const Lattice& l = source.lattice;
  if (!source.operators.empty() && l.size() > guards.lattice) {
    throw Error(Errc::guard_exceeded, "lattice of size " + std::to_string(l.size()) +
                                          " with operators exceeds the lattice guard " +
                                          std::to_string(guards.lattice));
  }
  for (const auto& f : source.operators) {
    if (f.arity() > guards.arity) {
      throw Error(Errc::guard_exceeded, "operator '" + f.name() + "' of arity " + std::to_string(f.arity()) +
                                            " exceeds the arity guard " + std::to_string(guards.arity));
    }
  }
  CanonicalFrame cf;
  cf.points_[0] = enumerate_filters(l);
  cf.points_[1] = enumerate_ideals(l);
  std::vector<Subset> rows(cf.points_[0].size());
  for (Point x = 0; x < rows.size(); ++x) {
    for (Point y = 0; y < cf.points_[1].size(); ++y) {
      if (cf.points_[0][x].intersects(cf.points_[1][y])) rows[x].insert(y);
    }
  }
  cf.polarity_ = std::make_shared<const Polarity>(Polarity::from_rows(cf.points_[1].size(), std::move(rows)));
  for (Element a = 0; a < l.size(); ++a) {
    cf.principal_[0].push_back(*cf.index_of(Sort::one, l.up(a)));
    cf.principal_[1].push_back(*cf.index_of(Sort::dual, l.down(a)));
  }
  cf.source_ = std::move(source);
  for (const auto& f : cf.source_.operators) cf.relations_.push_back(canonical_relation(cf, f));
  return cf;
}

CanonicalFrame canonical_polarity(const Lattice& lattice) {
  return build_canonical_frame(LatticeExpansion{lattice, {}, {}});
}

GaloisSet zeta1(const CanonicalFrame& cf, Element a) { return zeta(cf, Sort::one, a); }
GaloisSet zeta_d(const CanonicalFrame& cf, Element a) { return zeta(cf, Sort::dual, a); }

Point hat_point_operator(const CanonicalFrame& cf, const NormalOperator& f, std::span<const Point> u) {
  require_operator(cf, f);
  const auto sets = argument_sets(cf, f, u);
  const Subset image = image_set(f, sets);
  const Sort out = f.dtype().out;
  const Subset generated =
      out == Sort::one ? generate_filter(cf.lattice(), image) : generate_ideal(cf.lattice(), image);
  return *cf.index_of(out, generated);
}

SortedRelation canonical_relation(const CanonicalFrame& cf, const NormalOperator& f) {
  require_operator(cf, f);
  const Sort out = f.dtype().out;
  SortType st{out, f.dtype().args};
  const auto radices = carrier_radices(cf.polarity(), st.args);
  std::vector<Subset> sections;
  for_each_tuple(radices, [&](std::span<const std::size_t> u) {
    const Subset hat = cf.point_set(out, hat_point_operator(cf, f, u));
    Subset section;
    for (Point z = 0; z < cf.polarity().carrier_size(out); ++z) {
      if (hat.subset_of(cf.point_set(out, z))) section.insert(z);
    }
    sections.push_back(section);
  });
  return SortedRelation::from_sections(cf.polarity_ptr(), std::move(st), std::move(sections), f.name());
}

Report verify_canonical_lemmas(const CanonicalFrame& cf) {
  const Polarity& p = cf.polarity();
  Report root("canonical lemmas");
  root.add(Report::leaf("separated", is_separated(p)));
  const std::array<std::vector<Subset>, 2> up{preorder(p, Sort::one), preorder(p, Sort::dual)};
  auto up_of = [&](Sort s) -> const std::vector<Subset>& { return up[s == Sort::one ? 0 : 1]; };

  for (std::size_t i = 0; i < cf.relations().size(); ++i) {
    const NormalOperator& f = cf.source().operators[i];
    const SortedRelation& r = cf.relations()[i];
    const SortedRelation dual = galois_dual(r);
    const auto& st = r.sort_type();
    const Sort out = st.out;
    const auto radices = carrier_radices(p, st.args);
    Report node(f.name());
    Report closed("sections-are-closed-elements");
    Report decreasing("decreasing-per-place");
    Report unified("unified-relational");
    Report dual_char("galois-dual");

    for_each_tuple(radices, [&](std::span<const std::size_t> u) {
      const Point hat = hat_point_operator(cf, f, u);
      const Subset section = r.section(u);
      const std::string at = points_text(cf, st.args, u);
      if (section != up_of(out)[hat]) {
        closed.fail("section at " + at + " is " + to_text(section) + ", expected the closed element " +
                    to_text(up_of(out)[hat]));
      }
      std::vector<std::size_t> v(u.begin(), u.end());
      for (std::size_t j = 0; j < v.size(); ++j) {
        up_of(st.args[j])[u[j]].for_each([&](Point larger) {
          v[j] = larger;
          if (!r.section(v).subset_of(section)) {
            decreasing.fail("place " + std::to_string(j + 1) + ": raising " + at + " to " +
                            points_text(cf, st.args, v) + " adds related points");
          }
        });
        v[j] = u[j];
      }
      const Subset image = image_set(f, argument_sets(cf, f, u));
      for (Point z = 0; z < p.carrier_size(out); ++z) {
        if (section.contains(z) != image.subset_of(cf.point_set(out, z))) {
          unified.fail(cf.point_name(out, z) + " at " + at + " disagrees with the elementwise condition");
        }
      }
      const Subset dual_section = dual.section(u);
      for (Point w = 0; w < p.carrier_size(bar(out)); ++w) {
        const bool by_dual = dual_section.contains(w);
        const bool by_incidence = out == Sort::one ? p.incident(hat, w) : p.incident(w, hat);
        const bool by_elements = image.intersects(cf.point_set(bar(out), w));
        if (by_dual != by_incidence || by_incidence != by_elements) {
          dual_char.fail(cf.point_name(bar(out), w) + " at " + at + ": dual " + (by_dual ? "1" : "0") +
                         ", incidence " + (by_incidence ? "1" : "0") + ", elementwise " +
                         (by_elements ? "1" : "0"));
        }
      }
    });
    node.add(std::move(closed));
    node.add(std::move(decreasing));
    node.add(std::move(unified));
    node.add(std::move(dual_char));
    const StabilityReport stability = sections_all_stable(r);
    Report stable = Report::leaf("section-stability", stability.stable);
    if (stability.witness) stable.witness.push_back(stability.witness->describe());
    node.add(std::move(stable));
    root.add(std::move(node));
  }
  return root;
}

Report zeta_isomorphism_check(const CanonicalFrame& cf) {
  const Polarity& p = cf.polarity();
  const Lattice& l = cf.lattice();
  const StableLattice g = all_stable_sets(p, Sort::one);
  std::vector<Subset> images;
  for (Element a = 0; a < l.size(); ++a) images.push_back(zeta1(cf, a).members);

  Report root("zeta isomorphism");
  Report bijective("bijective");
  std::vector<Subset> sorted = images;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) bijective.fail("two elements share an image");
  if (sorted != g.sets()) {
    bijective.fail(std::to_string(g.size()) + " stable sets against " + std::to_string(l.size()) + " elements");
  }
  Report order("order");
  Report ops("meets-joins");
  for (Element a = 0; a < l.size(); ++a) {
    for (Element b = 0; b < l.size(); ++b) {
      const std::string pair = cf.source().element_name(a) + "," + cf.source().element_name(b);
      if (l.leq(a, b) != images[a].subset_of(images[b])) order.fail("order differs at " + pair);
      if (images[l.meet(a, b)] != (images[a] & images[b])) ops.fail("meet differs at " + pair);
      if (images[l.join(a, b)] != p.double_polar(Sort::one, images[a] | images[b])) {
        ops.fail("join differs at " + pair);
      }
    }
  }
  Report bounds("bounds");
  if (images[l.top()] != p.carrier(Sort::one)) bounds.fail("image of the top is not X");
  if (images[l.bottom()] != g.at(g.bottom())) bounds.fail("image of the bottom is not the least stable set");
  Report duality("polar-duality");
  Report clopen("clopen-witness");
  for (Element a = 0; a < l.size(); ++a) {
    const GaloisSet z1 = zeta1(cf, a);
    const GaloisSet zd = zeta_d(cf, a);
    if (prime(p, z1) != zd || prime(p, zd) != z1) duality.fail("at " + cf.source().element_name(a));
    const Point xa = cf.principal(Sort::one, a);
    const Point ya = cf.principal(Sort::dual, a);
    if (closed_element(p, Sort::one, xa) != z1 || open_element(p, Sort::dual, ya) != z1 || !p.incident(xa, ya)) {
      clopen.fail("at " + cf.source().element_name(a));
    }
  }
  root.add(std::move(bijective));
  root.add(std::move(order));
  root.add(std::move(ops));
  root.add(std::move(bounds));
  root.add(std::move(duality));
  root.add(std::move(clopen));
  return root;
}

Representation represent_operator(const CanonicalFrame& cf, const NormalOperator& f) {
  require_operator(cf, f);
  const Report lemmas = verify_canonical_lemmas(cf);
  if (!lemmas.passed) {
    throw Error(Errc::lemma_precondition_failed, "canonical lemmas fail; representation of '" + f.name() +
                                                     "' is not attempted");
  }
  const SortedRelation r = canonical_relation(cf, f);
  const auto& dt = f.dtype();
  std::vector<std::size_t> radices(f.arity(), cf.lattice().size());
  Report report("representation of " + f.name());
  std::size_t tuples = 0;
  std::size_t mismatches = 0;
  std::vector<GaloisSet> args(f.arity());
  for_each_tuple(radices, [&](std::span<const std::size_t> a) {
    for (std::size_t j = 0; j < a.size(); ++j) {
      args[j] = dt.args[j] == Sort::one ? zeta1(cf, a[j]) : zeta_d(cf, a[j]);
    }
    const Element value = f(a);
    const GaloisSet lhs = dt.out == Sort::one ? zeta1(cf, value) : zeta_d(cf, value);
    const GaloisSet rhs = closed_image(r, args);
    ++tuples;
    if (lhs != rhs) {
      ++mismatches;
      report.fail("at " + elements_text(cf.source(), a) + ": zeta of the value is " + to_text(lhs.members) +
                  ", closed image is " + to_text(rhs.members));
    }
  });
  report.detail = std::to_string(tuples) + " tuples, " + std::to_string(mismatches) + " mismatches";
  const std::vector<SortedRelation> one{r};
  LatticeExpansion algebra = complex_algebra(cf.polarity(), one);
  return Representation{std::move(algebra.operators.front()), std::move(report)};
}

Report representation_check(const CanonicalFrame& cf) {
  Report root("representation");
  root.add(zeta_isomorphism_check(cf));
  const StableLattice g = all_stable_sets(cf.polarity(), Sort::one);
  const Lattice& l = cf.lattice();
  for (const auto& f : cf.source().operators) {
    Representation rep = [&] {
      try {
        return represent_operator(cf, f);
      } catch (const Error& e) {
        Report failed = Report::leaf("representation of " + f.name(), false, e.what());
        return Representation{f, std::move(failed)};
      }
    }();
    root.add(std::move(rep.report));
    Report iso("isomorphism of " + f.name());
    std::vector<std::size_t> radices(f.arity(), l.size());
    std::vector<std::size_t> images(f.arity());
    for_each_tuple(radices, [&](std::span<const std::size_t> a) {
      for (std::size_t j = 0; j < a.size(); ++j) images[j] = g.require_index(zeta1(cf, a[j]).members);
      const std::size_t expected = g.require_index(zeta1(cf, f(a)).members);
      if (rep.represented(images) != expected) {
        iso.fail("at " + elements_text(cf.source(), a) + ": represented operator gives " +
                 to_text(g.at(rep.represented(images))) + ", expected " + to_text(g.at(expected)));
      }
    });
    root.add(std::move(iso));
  }
  return root;
}

GaloisSet sigma_extension(const CanonicalFrame& cf, const NormalOperator& f, std::span<const GaloisSet> closed) {
  require_operator(cf, f);
  require_sorts(f, closed);
  const Polarity& p = cf.polarity();
  std::vector<Subset> sets;
  for (const auto& g : closed) {
    const Point u = find_closed(p, preorder(p, g.sort), g);
    sets.push_back(cf.point_set(g.sort, u));
  }
  return GaloisSet{f.dtype().out, sigma_at(cf, f, sets)};
}

GaloisSet sigma_extension_stable(const CanonicalFrame& cf, const NormalOperator& f,
                                 std::span<const GaloisSet> stable) {
  require_operator(cf, f);
  require_sorts(f, stable);
  const Polarity& p = cf.polarity();
  for (const auto& g : stable) {
    if (!is_galois(p, g)) throw Error(Errc::not_galois, to_text(g.members) + " is not a Galois set");
  }
  const Sort out = f.dtype().out;
  std::vector<std::size_t> sizes;
  std::vector<std::vector<Point>> members;
  for (const auto& g : stable) {
    members.push_back(g.members.members());
    sizes.push_back(members.back().size());
  }
  Subset join;
  std::vector<Subset> sets(stable.size());
  for_each_tuple(sizes, [&](std::span<const std::size_t> t) {
    for (std::size_t j = 0; j < t.size(); ++j) sets[j] = cf.point_set(stable[j].sort, members[j][t[j]]);
    join |= sigma_at(cf, f, sets);
  });
  return GaloisSet{out, p.double_polar(out, join)};
}

GaloisSet pi_extension(const CanonicalFrame& cf, const NormalOperator& f, std::span<const GaloisSet> open) {
  require_operator(cf, f);
  require_sorts(f, open);
  std::vector<Subset> sets;
  for (const auto& g : open) sets.push_back(cf.point_set(bar(g.sort), find_open(cf.polarity(), g)));
  return GaloisSet{f.dtype().out, pi_at(cf, f, sets)};
}

Report extension_check(const CanonicalFrame& cf) {
  const Polarity& p = cf.polarity();
  Report root("extensions");
  for (std::size_t i = 0; i < cf.relations().size(); ++i) {
    const NormalOperator& f = cf.source().operators[i];
    const SortedRelation& r = cf.relations()[i];
    const auto& dt = f.dtype();
    const Sort out = dt.out;
    Report node(f.name());

    // f_σ on every tuple of points, reused for the stable tuples below.
    const auto radices = carrier_radices(p, dt.args);
    std::vector<Subset> sigma;
    Report closed("sigma-on-closed");
    for_each_tuple(radices, [&](std::span<const std::size_t> u) {
      const Subset value = sigma_at(cf, f, argument_sets(cf, f, u));
      sigma.push_back(value);
      const Subset expected = p.double_polar(out, Subset::singleton(hat_point_operator(cf, f, u)));
      if (value != expected) {
        closed.fail("at " + points_text(cf, dt.args, u) + ": " + to_text(value) + " against " + to_text(expected));
      }
    });

    Report stable("sigma-on-stable");
    std::vector<StableLattice> lattices;
    std::vector<std::size_t> counts;
    for (Sort s : dt.args) {
      lattices.push_back(all_stable_sets(p, s));
      counts.push_back(lattices.back().size());
    }
    std::vector<GaloisSet> args(f.arity());
    for_each_tuple(counts, [&](std::span<const std::size_t> t) {
      for (std::size_t j = 0; j < t.size(); ++j) args[j] = lattices[j].galois(t[j]);
      Subset join;
      for_each_tuple(radices, [&](std::span<const std::size_t> u) {
        for (std::size_t j = 0; j < u.size(); ++j) {
          if (!args[j].members.contains(u[j])) return;
        }
        join |= sigma[tuple_index(u, radices)];
      });
      const Subset lifted = p.double_polar(out, join);
      const GaloisSet image = closed_image(r, args);
      if (lifted != image.members) {
        std::string at;
        for (const auto& a : args) at += to_text(a.members);
        stable.fail("at " + at + ": " + to_text(lifted) + " against " + to_text(image.members));
      }
    });

    Report pi("pi-as-polar-of-dual-sigma");
    std::vector<Sort> opposite;
    for (Sort s : dt.args) opposite.push_back(bar(s));
    for_each_tuple(carrier_radices(p, opposite), [&](std::span<const std::size_t> v) {
      std::vector<Subset> sets;
      for (std::size_t j = 0; j < v.size(); ++j) sets.push_back(cf.point_set(opposite[j], v[j]));
      const Subset value = pi_at(cf, f, sets);
      Subset dual_sigma = p.carrier(bar(out));
      for_each_element_tuple(sets, [&](std::span<const Element> a) {
        dual_sigma &= zeta(cf, bar(out), f(a)).members;
      });
      if (value != p.polar(bar(out), dual_sigma)) {
        pi.fail("at " + points_text(cf, opposite, v) + ": " + to_text(value) + " against " +
                to_text(p.polar(bar(out), dual_sigma)));
      }
    });
    node.add(std::move(closed));
    node.add(std::move(stable));
    node.add(std::move(pi));
    root.add(std::move(node));
  }
  return root;
}

Report canonical_extension_check(const CanonicalFrame& cf) {
  const Polarity& p = cf.polarity();
  const Lattice& l = cf.lattice();
  const StableLattice g = all_stable_sets(p, Sort::one);
  std::vector<Subset> images;
  for (Element a = 0; a < l.size(); ++a) images.push_back(zeta1(cf, a).members);

  std::set<Subset> seeds(images.begin(), images.end());
  std::set<Subset> meet_seeds = seeds;
  meet_seeds.insert(p.carrier(Sort::one));
  std::set<Subset> join_seeds = seeds;
  join_seeds.insert(g.at(g.bottom()));
  const auto meets = close_under(meet_seeds, [](Subset a, Subset b) { return a & b; });
  const auto joins = close_under(join_seeds, [&](Subset a, Subset b) { return p.double_polar(Sort::one, a | b); });

  Report root("canonical extension");
  Report density("density");
  for (Subset s : g.sets()) {
    Subset below;
    for (Subset m : meets) {
      if (m.subset_of(s)) below |= m;
    }
    if (p.double_polar(Sort::one, below) != s) density.fail(to_text(s) + " is not a join of meets of the image");
    Subset above = p.carrier(Sort::one);
    for (Subset j : joins) {
      if (s.subset_of(j)) above &= j;
    }
    if (above != s) density.fail(to_text(s) + " is not a meet of joins of the image");
  }

  const auto up = preorder(p, Sort::one);
  std::vector<Subset> closed_elements(up.begin(), up.end());
  std::vector<Subset> open_elements;
  for (Point y = 0; y < p.ny(); ++y) open_elements.push_back(p.column(y));

  Report compact("compactness");
  for (Point x = 0; x < p.nx(); ++x) {
    for (Point y = 0; y < p.ny(); ++y) {
      const bool below = closed_elements[x].subset_of(open_elements[y]);
      const bool meet = cf.filters()[x].intersects(cf.ideals()[y]);
      if (below != meet) {
        compact.fail(cf.point_name(Sort::one, x) + " against " + cf.point_name(Sort::dual, y) +
                     ": closed below open " + (below ? "holds" : "fails") + " but the filter and ideal " +
                     (meet ? "meet" : "are disjoint"));
      }
    }
  }
  const auto closed_meets = close_under(std::set<Subset>(closed_elements.begin(), closed_elements.end()),
                                        [](Subset a, Subset b) { return a & b; });
  const auto open_joins = close_under(std::set<Subset>(open_elements.begin(), open_elements.end()),
                                      [&](Subset a, Subset b) { return p.double_polar(Sort::one, a | b); });
  for (Subset m : closed_meets) {
    for (Subset j : open_joins) {
      if (!m.subset_of(j)) continue;
      const bool interpolated = std::any_of(images.begin(), images.end(),
                                            [&](Subset z) { return m.subset_of(z) && z.subset_of(j); });
      if (!interpolated) compact.fail("no image lies between " + to_text(m) + " and " + to_text(j));
    }
  }

  Report closed("closed-elements");
  for (Point x = 0; x < p.nx(); ++x) {
    Subset meet = p.carrier(Sort::one);
    cf.filters()[x].for_each([&](Element a) { meet &= images[a]; });
    if (meet != closed_elements[x]) closed.fail(cf.point_name(Sort::one, x) + ": closed element " +
                                                to_text(closed_elements[x]) + " against meet " + to_text(meet));
  }
  Report open("open-elements");
  for (Point y = 0; y < p.ny(); ++y) {
    Subset join;
    cf.ideals()[y].for_each([&](Element a) { join |= images[a]; });
    join = p.double_polar(Sort::one, join);
    if (join != open_elements[y]) open.fail(cf.point_name(Sort::dual, y) + ": open element " +
                                            to_text(open_elements[y]) + " against join " + to_text(join));
  }
  Report clopen("clopen-images");
  for (Subset s : g.sets()) {
    const bool is_image = std::find(images.begin(), images.end(), s) != images.end();
    if (is_clopen(p, GaloisSet{Sort::one, s}) != is_image) {
      clopen.fail(to_text(s) + (is_image ? " is an image but not clopen" : " is clopen but not an image"));
    }
  }
  root.add(std::move(density));
  root.add(std::move(compact));
  root.add(std::move(closed));
  root.add(std::move(open));
  root.add(std::move(clopen));
  return root;
}

}  // namespace polaritykit
