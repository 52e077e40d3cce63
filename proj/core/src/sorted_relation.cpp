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

#include "polaritykit/sorted_relation.hpp"

#include <algorithm>
#include <array>

#include "polaritykit/error.hpp"
#include "polaritykit/tuples.hpp"

namespace polaritykit {

namespace {

std::string points_text(std::span<const Point> t, std::optional<std::size_t> hole = std::nullopt) {
  std::string out = "(";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) out += ",";
    out += (hole && *hole == i) ? "_" : std::to_string(t[i]);
  }
  return out + ")";
}

std::size_t row_major(std::span<const Point> t, std::span<const std::size_t> radices) {
  std::size_t idx = 0;
  for (std::size_t j = 0; j < t.size(); ++j) idx = idx * radices[j] + t[j];
  return idx;
}

void require_place(const SortedRelation& r, std::size_t k) {
  if (k >= r.arity()) {
    throw Error(Errc::index_out_of_range, "place " + std::to_string(k + 1) + " of a relation of arity " +
                                              std::to_string(r.arity()));
  }
}

void require_subsets(const SortedRelation& r, std::span<const Subset> w) {
  if (w.size() != r.arity()) {
    throw Error(Errc::sort_mismatch, "relation '" + r.name() + "' takes " + std::to_string(r.arity()) +
                                         " arguments, got " + std::to_string(w.size()));
  }
  for (std::size_t j = 0; j < w.size(); ++j) {
    if (!w[j].subset_of(r.polarity().carrier(r.sort_type().args[j]))) {
      throw Error(Errc::sort_mismatch, "argument " + std::to_string(j + 1) + " " + to_text(w[j]) +
                                           " is not a subset of Z_" + std::string(glyph(r.sort_type().args[j])));
    }
  }
}

void require_galois(const Polarity& p, const GaloisSet& g, Sort expected, std::string_view what) {
  if (g.sort != expected) {
    throw Error(Errc::sort_mismatch, std::string(what) + " has sort " + std::string(glyph(g.sort)) +
                                         ", expected " + std::string(glyph(expected)));
  }
  if (!g.members.subset_of(p.carrier(g.sort)) || !is_galois(p, g)) {
    throw Error(Errc::not_galois, std::string(what) + " " + to_text(g.members) + " is not a Galois set");
  }
}

void require_galois_args(const SortedRelation& r, std::span<const GaloisSet> f,
                         std::optional<std::size_t> skip = std::nullopt) {
  if (f.size() != r.arity()) {
    throw Error(Errc::sort_mismatch, "relation '" + r.name() + "' takes " + std::to_string(r.arity()) +
                                         " arguments, got " + std::to_string(f.size()));
  }
  for (std::size_t j = 0; j < f.size(); ++j) {
    if (skip && *skip == j) continue;
    require_galois(r.polarity(), f[j], r.sort_type().args[j], "argument " + std::to_string(j + 1));
  }
}

Subset image_raw(const SortedRelation& r, std::span<const Subset> w) {
  const std::size_t n = w.size();
  std::vector<std::vector<Point>> members(n);
  std::vector<std::size_t> sizes(n);
  for (std::size_t j = 0; j < n; ++j) {
    members[j] = w[j].members();
    sizes[j] = members[j].size();
  }
  Subset out;
  std::vector<Point> point(n);
  for_each_tuple(sizes, [&](std::span<const std::size_t> t) {
    for (std::size_t j = 0; j < n; ++j) point[j] = members[j][t[j]];
    out |= r.section_at(row_major(point, r.radices()));
  });
  return out;
}

std::vector<Subset> members_of(std::span<const GaloisSet> f) {
  std::vector<Subset> out;
  out.reserve(f.size());
  for (const auto& g : f) out.push_back(g.members);
  return out;
}

}  // namespace

std::string SortType::to_string() const {
  return std::string(glyph(out)) + ";" + sorts_to_string(args, " ");
}

SortType SortType::parse(std::string_view text) {
  std::string_view body = text;
  while (!body.empty() && body.front() == ' ') body.remove_prefix(1);
  while (!body.empty() && body.back() == ' ') body.remove_suffix(1);
  if (!body.empty() && body.front() == '(') {
    if (body.back() != ')') throw Error(Errc::sort_mismatch, "unbalanced parentheses in '" + std::string(text) + "'");
    body = body.substr(1, body.size() - 2);
  }
  const std::size_t semi = body.find(';');
  if (semi == std::string_view::npos) {
    throw Error(Errc::sort_mismatch, "sort type '" + std::string(text) + "' lacks ';'");
  }
  auto out = parse_sorts(body.substr(0, semi));
  if (out.size() != 1) throw Error(Errc::sort_mismatch, "sort type '" + std::string(text) + "' needs one output sort");
  SortType st;
  st.out = out.front();
  st.args = parse_sorts(body.substr(semi + 1));
  if (st.args.empty()) throw Error(Errc::sort_mismatch, "sort type '" + std::string(text) + "' has no argument sorts");
  return st;
}

SortedRelation::SortedRelation(std::shared_ptr<const Polarity> polarity, SortType stype, std::string name)
    : polarity_(std::move(polarity)), stype_(std::move(stype)), name_(std::move(name)) {
  for (Sort s : stype_.args) radices_.push_back(polarity_->carrier_size(s));
  sections_.assign(tuple_count(radices_), Subset{});
}

SortedRelation SortedRelation::from_tuples(std::shared_ptr<const Polarity> polarity, SortType stype,
                                           const std::vector<std::vector<Point>>& tuples, std::string name) {
  SortedRelation r(std::move(polarity), std::move(stype), std::move(name));
  const std::size_t n = r.arity();
  for (const auto& t : tuples) {
    if (t.size() != n + 1) {
      throw Error(Errc::sort_mismatch, "tuple " + points_text(t) + " of relation '" + r.name_ + "' should have " +
                                           std::to_string(n + 1) + " entries");
    }
    if (t[0] >= r.polarity_->carrier_size(r.stype_.out)) {
      throw Error(Errc::index_out_of_range, "tuple " + points_text(t) + ": output point out of range");
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (t[j + 1] >= r.radices_[j]) {
        throw Error(Errc::index_out_of_range,
                    "tuple " + points_text(t) + ": place " + std::to_string(j + 1) + " out of range");
      }
    }
    r.sections_[row_major(std::span<const Point>(t).subspan(1), r.radices_)].insert(t[0]);
  }
  return r;
}

SortedRelation SortedRelation::from_sections(std::shared_ptr<const Polarity> polarity, SortType stype,
                                             std::vector<Subset> sections, std::string name) {
  SortedRelation r(std::move(polarity), std::move(stype), std::move(name));
  if (sections.size() != r.sections_.size()) {
    throw Error(Errc::sort_mismatch, "relation '" + r.name_ + "' needs " + std::to_string(r.sections_.size()) +
                                         " sections, got " + std::to_string(sections.size()));
  }
  const Subset carrier = r.polarity_->carrier(r.stype_.out);
  for (Subset s : sections) {
    if (!s.subset_of(carrier)) throw Error(Errc::index_out_of_range, "section " + to_text(s) + " out of range");
  }
  r.sections_ = std::move(sections);
  return r;
}

Subset SortedRelation::section(std::span<const Point> args) const {
  if (args.size() != arity()) {
    throw Error(Errc::sort_mismatch, "relation '" + name_ + "' takes " + std::to_string(arity()) +
                                         " arguments, got " + std::to_string(args.size()));
  }
  for (std::size_t j = 0; j < args.size(); ++j) {
    if (args[j] >= radices_[j]) {
      throw Error(Errc::sort_mismatch, "argument " + std::to_string(j + 1) + " of " + points_text(args) +
                                           " is not a point of Z_" + std::string(glyph(stype_.args[j])));
    }
  }
  return sections_[row_major(args, radices_)];
}

Subset SortedRelation::hole_section(Point w, const HoleTuple& t) const {
  Subset out;
  std::vector<Point> point = t.entries;
  for (Point v = 0; v < radices_[t.hole]; ++v) {
    point[t.hole] = v;
    if (section(point).contains(w)) out.insert(v);
  }
  return out;
}

std::vector<std::vector<Point>> SortedRelation::tuples() const {
  std::vector<std::vector<Point>> out;
  for_each_tuple(radices_, [&](std::span<const std::size_t> t) {
    sections_[row_major(t, radices_)].for_each([&](Point w) {
      std::vector<Point> tuple{w};
      tuple.insert(tuple.end(), t.begin(), t.end());
      out.push_back(std::move(tuple));
    });
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t SortedRelation::size() const {
  std::size_t n = 0;
  for (Subset s : sections_) n += s.count();
  return n;
}

SortedRelation galois_dual(const SortedRelation& r) {
  SortType st{bar(r.sort_type().out), r.sort_type().args};
  std::vector<Subset> sections(r.argument_tuple_count());
  for (std::size_t i = 0; i < sections.size(); ++i) {
    sections[i] = r.polarity().polar(r.sort_type().out, r.section_at(i));
  }
  return SortedRelation::from_sections(r.polarity_ptr(), std::move(st), std::move(sections), r.name() + "'");
}

std::string SectionWitness::describe() const {
  if (full_section) {
    return "section at " + points_text(tuple) + " is " + to_text(section) + ", closure " + to_text(closure);
  }
  return "place-" + std::to_string(hole + 1) + " section at w=" + std::to_string(w) + ", " +
         points_text(tuple, hole) + " is " + to_text(section) + ", closure " + to_text(closure);
}

StabilityReport k_sections_stable(const SortedRelation& r, std::size_t k) {
  require_place(r, k);
  const SortedRelation dual = galois_dual(r);
  const Polarity& p = r.polarity();
  const Sort in = r.sort_type().args[k];
  std::vector<std::size_t> radices(r.radices().begin(), r.radices().end());
  radices[k] = 1;
  StabilityReport report;
  for (Point w = 0; w < p.carrier_size(dual.sort_type().out) && report.stable; ++w) {
    for_each_tuple(radices, [&](std::span<const std::size_t> t) {
      if (!report.stable) return;
      HoleTuple hole{std::vector<Point>(t.begin(), t.end()), k};
      const Subset s = dual.hole_section(w, hole);
      const Subset c = p.double_polar(in, s);
      if (c != s) {
        report.stable = false;
        report.witness = SectionWitness{false, w, hole.entries, k, s, c};
      }
    });
  }
  return report;
}

StabilityReport sections_all_stable(const SortedRelation& r) {
  const SortedRelation dual = galois_dual(r);
  const Sort out = dual.sort_type().out;
  StabilityReport report;
  for_each_tuple(r.radices(), [&](std::span<const std::size_t> t) {
    if (!report.stable) return;
    const Subset s = dual.section(t);
    const Subset c = r.polarity().double_polar(out, s);
    if (c != s) {
      report.stable = false;
      report.witness = SectionWitness{true, 0, std::vector<Point>(t.begin(), t.end()), 0, s, c};
    }
  });
  for (std::size_t k = 0; k < r.arity() && report.stable; ++k) report = k_sections_stable(r, k);
  return report;
}

Subset image_operator(const SortedRelation& r, std::span<const Subset> w) {
  require_subsets(r, w);
  return image_raw(r, w);
}

Subset residual_sets(const SortedRelation& r, std::size_t k, std::span<const Subset> w, Subset u) {
  require_place(r, k);
  std::vector<Subset> args(w.begin(), w.end());
  if (args.size() == r.arity()) args[k] = Subset{};
  require_subsets(r, args);
  Subset out;
  for (Point v = 0; v < r.radices()[k]; ++v) {
    args[k] = Subset::singleton(v);
    if (image_raw(r, args).subset_of(u)) out.insert(v);
  }
  return out;
}

GaloisSet closed_image(const SortedRelation& r, std::span<const GaloisSet> f) {
  require_galois_args(r, f);
  const auto args = members_of(f);
  const Sort out = r.sort_type().out;
  return GaloisSet{out, r.polarity().double_polar(out, image_raw(r, args))};
}

ResidualForms residual_forms(const SortedRelation& r, std::size_t k, std::span<const GaloisSet> e,
                             const GaloisSet& g) {
  require_place(r, k);
  require_galois_args(r, e, k);
  require_galois(r.polarity(), g, r.sort_type().out, "target");
  const Polarity& p = r.polarity();
  const Sort in = r.sort_type().args[k];
  auto args = members_of(e);
  ResidualForms forms;
  const StableLattice stable = all_stable_sets(p, in);
  for (Subset f : stable.sets()) {
    args[k] = f;
    if (image_raw(r, args).subset_of(g.members)) forms.union_of_galois |= f;
  }
  for (Point u = 0; u < p.carrier_size(in); ++u) {
    args[k] = p.double_polar(in, Subset::singleton(u));
    if (image_raw(r, args).subset_of(g.members)) {
      forms.union_of_closed |= args[k];
      forms.pointwise.insert(u);
    }
  }
  return forms;
}

GaloisSet residual_galois(const SortedRelation& r, std::size_t k, std::span<const GaloisSet> e,
                          const GaloisSet& g) {
  const ResidualForms forms = residual_forms(r, k, e, g);
  if (forms.union_of_galois != forms.union_of_closed || forms.union_of_closed != forms.pointwise) {
    throw Error(Errc::not_residuated, "residual forms disagree at place " + std::to_string(k + 1) + ": " +
                                          to_text(forms.union_of_galois) + ", " + to_text(forms.union_of_closed) +
                                          ", " + to_text(forms.pointwise));
  }
  GaloisSet out{r.sort_type().args[k], forms.pointwise};
  if (!is_galois(r.polarity(), out)) {
    throw Error(Errc::not_residuated, "residual " + to_text(out.members) + " at place " + std::to_string(k + 1) +
                                          " is not a Galois set");
  }
  return out;
}

GaloisSet conjugate_operator(const SortedRelation& r, std::size_t k, std::span<const GaloisSet> f) {
  require_place(r, k);
  require_galois_args(r, f, k);
  const Polarity& p = r.polarity();
  const Sort out = r.sort_type().out;
  const Sort in = r.sort_type().args[k];
  require_galois(p, f[k], bar(out), "place-" + std::to_string(k + 1) + " argument");
  const Subset bound = p.polar(bar(out), f[k].members);
  auto args = members_of(f);
  Subset meet = p.carrier(bar(in));
  const StableLattice co = all_stable_sets(p, bar(in));
  for (Subset e : co.sets()) {
    args[k] = p.polar(bar(in), e);
    if (p.double_polar(out, image_raw(r, args)).subset_of(bound)) meet &= e;
  }
  return GaloisSet{bar(in), meet};
}

SortedRelation conjugate_relation_from(const SortedRelation& r, std::size_t k) {
  require_place(r, k);
  const StabilityReport stability = sections_all_stable(r);
  if (!stability.stable) {
    throw Error(Errc::sections_not_stable, "relation '" + r.name() + "': " + stability.witness->describe());
  }
  const SortedRelation dual = galois_dual(r);
  const Polarity& p = r.polarity();
  const Sort in = r.sort_type().args[k];
  SortType st{bar(in), r.sort_type().args};
  st.args[k] = bar(r.sort_type().out);
  SortedRelation s(r.polarity_ptr(), st, r.name() + "/" + std::to_string(k + 1));
  std::vector<std::size_t> radices(s.radices().begin(), s.radices().end());
  std::vector<Subset> sections;
  for_each_tuple(radices, [&](std::span<const std::size_t> t) {
    HoleTuple hole{std::vector<Point>(t.begin(), t.end()), k};
    sections.push_back(p.polar(in, dual.hole_section(t[k], hole)));
  });
  return SortedRelation::from_sections(r.polarity_ptr(), std::move(st), std::move(sections), s.name());
}

bool is_conjugate_pair(const SortedRelation& r, const SortedRelation& s, std::size_t k) {
  require_place(r, k);
  const auto& rt = r.sort_type();
  const auto& st = s.sort_type();
  bool fits = r.polarity() == s.polarity() && st.arity() == rt.arity() && st.out == bar(rt.args[k]);
  for (std::size_t j = 0; fits && j < rt.arity(); ++j) {
    fits = st.args[j] == (j == k ? bar(rt.out) : rt.args[j]);
  }
  if (!fits) {
    throw Error(Errc::sort_mismatch, "sort types " + rt.to_string() + " and " + st.to_string() +
                                         " do not form a conjugate pair at place " + std::to_string(k + 1));
  }
  const Polarity& p = r.polarity();
  const GaloisLattices g(p);
  const StableLattice& out = g.of(rt.out);
  std::vector<std::size_t> radices;
  for (Sort a : rt.args) radices.push_back(g.of(a).size());
  bool ok = true;
  std::vector<Subset> args(rt.arity());
  for_each_tuple(radices, [&](std::span<const std::size_t> t) {
    if (!ok) return;
    for (std::size_t j = 0; j < t.size(); ++j) args[j] = g.of(rt.args[j]).at(t[j]);
    const Subset image = image_raw(r, args);
    const Subset fk = args[k];
    const Subset fk_polar = p.polar(rt.args[k], fk);
    for (Subset target : out.sets()) {
      args[k] = p.polar(rt.out, target);
      const bool lhs = image.subset_of(target);
      const bool rhs = image_raw(s, args).subset_of(fk_polar);
      args[k] = fk;
      if (lhs != rhs) {
        ok = false;
        return;
      }
    }
  });
  return ok;
}

SortedOperator closed_image_operator(const SortedRelation& r) {
  auto g = std::make_shared<const GaloisLattices>(r.polarity());
  const auto& st = r.sort_type();
  std::vector<std::size_t> radices;
  for (Sort s : st.args) radices.push_back(g->of(s).size());
  const StableLattice& out = g->of(st.out);
  std::vector<Subset> args(r.arity());
  std::vector<std::size_t> table;
  for_each_tuple(radices, [&](std::span<const std::size_t> t) {
    for (std::size_t j = 0; j < t.size(); ++j) args[j] = g->of(st.args[j]).at(t[j]);
    table.push_back(out.require_index(r.polarity().double_polar(st.out, image_raw(r, args))));
  });
  return SortedOperator(std::move(g), st.args, st.out, std::move(table));
}

AdditivityReport check_complete_additivity(const SortedRelation& r, std::size_t k, std::size_t guard) {
  require_place(r, k);
  return completely_additive(closed_image_operator(r), k, guard);
}

EquivalenceReport additivity_equivalence(const SortedRelation& r, std::size_t k, std::size_t guard) {
  require_place(r, k);
  const SortedOperator alpha = closed_image_operator(r);
  const SortedOperator gamma = conjugate_of(alpha, k);
  const SortedOperator beta = residual_of(alpha, k);
  EquivalenceReport report;
  report.additive = completely_additive(alpha, k, guard).holds;
  report.conjugate_law = conjugacy_law(alpha, gamma, k);
  report.residual_law = residuation_law(alpha, beta, k);
  const GaloisLattices& g = alpha.lattices();
  const Sort in = r.sort_type().args[k];
  const Sort out = r.sort_type().out;
  for_each_tuple(beta.radices(), [&](std::span<const std::size_t> t) {
    std::vector<std::size_t> s(t.begin(), t.end());
    s[k] = g.of(bar(out)).require_index(g.polarity().polar(out, g.of(out).at(t[k])));
    const Subset polar = g.polarity().polar(bar(in), g.of(bar(in)).at(gamma(s)));
    if (g.of(in).at(beta(t)) != polar) report.residual_is_polar_of_conjugate = false;
  });
  return report;
}

LatticeExpansion complex_algebra(const Polarity& p, std::span<const SortedRelation> relations) {
  const StableLattice stable = all_stable_sets(p, Sort::one);
  std::vector<NormalOperator> ops;
  for (const auto& r : relations) {
    if (!(r.polarity() == p)) {
      throw Error(Errc::sort_mismatch, "relation '" + r.name() + "' lives on a different polarity");
    }
    const StabilityReport stability = sections_all_stable(r);
    if (!stability.stable) {
      throw Error(Errc::sections_not_stable, "relation '" + r.name() + "': " + stability.witness->describe());
    }
    const auto& st = r.sort_type();
    std::vector<std::size_t> radices(r.arity(), stable.size());
    std::vector<Element> table;
    std::vector<Subset> args(r.arity());
    for_each_tuple(radices, [&](std::span<const std::size_t> t) {
      for (std::size_t j = 0; j < t.size(); ++j) {
        const Subset a = stable.at(t[j]);
        args[j] = st.args[j] == Sort::one ? a : p.polar(Sort::one, a);
      }
      Subset image = p.double_polar(st.out, image_raw(r, args));
      if (st.out == Sort::dual) image = p.polar(Sort::dual, image);
      table.push_back(stable.require_index(image));
    });
    ops.emplace_back(r.name(), DistributionType{st.args, st.out}, stable.size(), std::move(table));
  }
  std::vector<std::string> names;
  for (Subset s : stable.sets()) names.push_back(to_text(s));
  return make_expansion(stable.as_lattice(), std::move(ops), std::move(names));
}

GaloisSet goldblatt_operator(const SortedRelation& s, std::span<const GaloisSet> f) {
  require_galois_args(s, f);
  const Sort out = s.sort_type().out;
  const std::size_t n = f.size();
  std::vector<std::vector<Point>> members(n);
  std::vector<std::size_t> sizes(n);
  for (std::size_t j = 0; j < n; ++j) {
    members[j] = f[j].members.members();
    sizes[j] = members[j].size();
  }
  Subset meet = s.polarity().carrier(out);
  std::vector<Point> point(n);
  for_each_tuple(sizes, [&](std::span<const std::size_t> t) {
    for (std::size_t j = 0; j < n; ++j) point[j] = members[j][t[j]];
    meet &= s.section(point);
  });
  return GaloisSet{bar(out), s.polarity().polar(out, meet)};
}

}  // namespace polaritykit
