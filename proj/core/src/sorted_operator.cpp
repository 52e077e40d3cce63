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

#include "polaritykit/sorted_operator.hpp"

#include <bit>

#include "polaritykit/error.hpp"
#include "polaritykit/tuples.hpp"

namespace polaritykit {

namespace {

std::vector<std::size_t> lattice_radices(const GaloisLattices& g, const std::vector<Sort>& args) {
  std::vector<std::size_t> r;
  for (Sort s : args) r.push_back(g.of(s).size());
  return r;
}

/// Index in 𝒢(Z_bar(s)) of the polar of every Galois set of sort s.
std::vector<std::size_t> polar_indices(const GaloisLattices& g, Sort s) {
  const StableLattice& from = g.of(s);
  const StableLattice& to = g.of(bar(s));
  std::vector<std::size_t> out;
  for (Subset a : from.sets()) out.push_back(to.require_index(g.polarity().polar(s, a)));
  return out;
}

void require_place(const SortedOperator& f, std::size_t k) {
  if (k >= f.arity()) {
    throw Error(Errc::index_out_of_range, "place " + std::to_string(k + 1) + " of an operator of arity " +
                                              std::to_string(f.arity()));
  }
}

void require_shape(const SortedOperator& f, const SortedOperator& g, std::size_t k, Sort place_sort, Sort out,
                   std::string_view what) {
  bool fits = f.lattices().polarity() == g.lattices().polarity() && g.arity() == f.arity() && g.out() == out;
  for (std::size_t j = 0; fits && j < f.arity(); ++j) fits = g.args()[j] == (j == k ? place_sort : f.args()[j]);
  if (!fits) {
    throw Error(Errc::sort_mismatch, "operators do not have the sorts of a " + std::string(what) + " at place " +
                                         std::to_string(k + 1));
  }
}

}  // namespace

SortedOperator::SortedOperator(std::shared_ptr<const GaloisLattices> lattices, std::vector<Sort> args, Sort out,
                               std::vector<std::size_t> table)
    : lattices_(std::move(lattices)), args_(std::move(args)), out_(out), table_(std::move(table)) {
  radices_ = lattice_radices(*lattices_, args_);
  if (table_.size() != tuple_count(radices_)) {
    throw Error(Errc::arity_mismatch, "operator table has " + std::to_string(table_.size()) + " entries, expected " +
                                          std::to_string(tuple_count(radices_)));
  }
  for (std::size_t v : table_) {
    if (v >= lattices_->of(out_).size()) {
      throw Error(Errc::index_out_of_range, "operator value " + std::to_string(v) + " is not a Galois set index");
    }
  }
}

std::size_t SortedOperator::operator()(std::span<const std::size_t> indices) const {
  return table_[tuple_index(indices, radices_)];
}

GaloisSet SortedOperator::apply(std::span<const GaloisSet> args) const {
  if (args.size() != arity()) {
    throw Error(Errc::sort_mismatch, "operator takes " + std::to_string(arity()) + " arguments, got " +
                                         std::to_string(args.size()));
  }
  std::vector<std::size_t> indices;
  for (std::size_t j = 0; j < args.size(); ++j) {
    if (args[j].sort != args_[j]) {
      throw Error(Errc::sort_mismatch, "argument " + std::to_string(j + 1) + " has sort " +
                                           std::string(glyph(args[j].sort)));
    }
    indices.push_back(lattice(args_[j]).require_index(args[j].members));
  }
  const std::size_t v = (*this)(indices);
  return lattice(out_).galois(v);
}

SortedOperator conjugate_of(const SortedOperator& f, std::size_t k) {
  require_place(f, k);
  const GaloisLattices& g = f.lattices();
  const Sort in = f.args()[k];
  const StableLattice& co = g.of(bar(in));
  const StableLattice& out = g.of(f.out());
  const auto primed_e = polar_indices(g, bar(in));        // E ↦ E′ in 𝒢(Z_{i_k})
  const auto primed_k = polar_indices(g, bar(f.out()));   // K ↦ K′ in 𝒢(Z_out)
  std::vector<Sort> args = f.args();
  args[k] = bar(f.out());
  std::vector<std::size_t> table;
  for_each_tuple(lattice_radices(g, args), [&](std::span<const std::size_t> t) {
    std::vector<std::size_t> s(t.begin(), t.end());
    const Subset bound = out.at(primed_k[t[k]]);
    Subset meet = g.polarity().carrier(bar(in));
    for (std::size_t e = 0; e < co.size(); ++e) {
      s[k] = primed_e[e];
      if (out.at(f(s)).subset_of(bound)) meet &= co.at(e);
    }
    table.push_back(co.require_index(meet));
  });
  return SortedOperator(f.lattices_ptr(), std::move(args), bar(in), std::move(table));
}

SortedOperator residual_of(const SortedOperator& f, std::size_t k) {
  require_place(f, k);
  const GaloisLattices& g = f.lattices();
  const Sort in = f.args()[k];
  const StableLattice& lk = g.of(in);
  const StableLattice& out = g.of(f.out());
  std::vector<Sort> args = f.args();
  args[k] = f.out();
  std::vector<std::size_t> table;
  for_each_tuple(lattice_radices(g, args), [&](std::span<const std::size_t> t) {
    std::vector<std::size_t> s(t.begin(), t.end());
    const Subset target = out.at(t[k]);
    std::size_t join = lk.bottom();
    for (std::size_t h = 0; h < lk.size(); ++h) {
      s[k] = h;
      if (out.at(f(s)).subset_of(target)) join = lk.join(join, h);
    }
    table.push_back(join);
  });
  return SortedOperator(f.lattices_ptr(), std::move(args), in, std::move(table));
}

AdditivityReport completely_additive(const SortedOperator& f, std::size_t k, std::size_t guard) {
  require_place(f, k);
  const StableLattice& lk = f.lattice(f.args()[k]);
  const StableLattice& out = f.lattice(f.out());
  const std::size_t m = lk.size();
  if (m > guard) {
    throw Error(Errc::guard_exceeded, "place " + std::to_string(k + 1) + " has " + std::to_string(m) +
                                          " Galois sets, above the family guard " + std::to_string(guard));
  }
  const std::size_t families = std::size_t{1} << m;
  std::vector<std::size_t> join_of(families, lk.bottom());
  for (std::size_t mask = 1; mask < families; ++mask) {
    join_of[mask] = lk.join(join_of[mask & (mask - 1)], static_cast<std::size_t>(std::countr_zero(mask)));
  }
  std::vector<std::size_t> radices = f.radices();
  radices[k] = 1;
  AdditivityReport report;
  std::vector<std::size_t> images(m);
  std::vector<std::size_t> image_join(families);
  for_each_tuple(radices, [&](std::span<const std::size_t> ctx) {
    if (!report.holds) return;
    std::vector<std::size_t> t(ctx.begin(), ctx.end());
    for (std::size_t i = 0; i < m; ++i) {
      t[k] = i;
      images[i] = f(t);
    }
    image_join[0] = out.bottom();
    for (std::size_t mask = 0; mask < families; ++mask) {
      if (mask != 0) {
        image_join[mask] = out.join(image_join[mask & (mask - 1)],
                                    images[static_cast<std::size_t>(std::countr_zero(mask))]);
      }
      t[k] = join_of[mask];
      if (f(t) == image_join[mask]) continue;
      report.holds = false;
      std::string context;
      for (std::size_t j = 0; j < t.size(); ++j) {
        if (j) context += ",";
        context += j == k ? "_" : to_text(f.lattice(f.args()[j]).at(t[j]));
      }
      std::string family = "{";
      for (std::size_t i = 0; i < m; ++i) {
        if ((mask >> i) & 1U) family += (family.size() > 1 ? "," : "") + to_text(lk.at(i));
      }
      report.witness = "place " + std::to_string(k + 1) + ", context (" + context + "), family " + family +
                       "}: image of the join is " + to_text(out.at(f(t))) + ", join of the images is " +
                       to_text(out.at(image_join[mask]));
      return;
    }
  });
  return report;
}

bool conjugacy_law(const SortedOperator& f, const SortedOperator& g, std::size_t k) {
  require_place(f, k);
  const Sort in = f.args()[k];
  require_shape(f, g, k, bar(f.out()), bar(in), "conjugate");
  const GaloisLattices& l = f.lattices();
  const StableLattice& out = l.of(f.out());
  const auto primed_out = polar_indices(l, f.out());
  const auto primed_in = polar_indices(l, in);
  bool ok = true;
  for_each_tuple(f.radices(), [&](std::span<const std::size_t> t) {
    if (!ok) return;
    std::vector<std::size_t> s(t.begin(), t.end());
    const Subset bound = l.of(bar(in)).at(primed_in[t[k]]);
    const Subset image = out.at(f(t));
    for (std::size_t target = 0; target < out.size() && ok; ++target) {
      s[k] = primed_out[target];
      ok = image.subset_of(out.at(target)) == l.of(bar(in)).at(g(s)).subset_of(bound);
    }
  });
  return ok;
}

bool residuation_law(const SortedOperator& f, const SortedOperator& b, std::size_t k) {
  require_place(f, k);
  const Sort in = f.args()[k];
  require_shape(f, b, k, f.out(), in, "residual");
  const StableLattice& out = f.lattice(f.out());
  const StableLattice& lk = f.lattice(in);
  bool ok = true;
  for_each_tuple(f.radices(), [&](std::span<const std::size_t> t) {
    if (!ok) return;
    std::vector<std::size_t> s(t.begin(), t.end());
    const Subset image = out.at(f(t));
    for (std::size_t target = 0; target < out.size() && ok; ++target) {
      s[k] = target;
      ok = image.subset_of(out.at(target)) == lk.at(t[k]).subset_of(lk.at(b(s)));
    }
  });
  return ok;
}

}  // namespace polaritykit
