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

#include <functional>
#include <memory>
#include <random>
#include <utility>
#include <vector>

#include "doctest.h"
#include "oracle.hpp"
#include "polaritykit/canonical_frame.hpp"
#include "polaritykit/error.hpp"
#include "polaritykit/sorted_relation.hpp"
#include "random_frames.hpp"

using namespace polaritykit;

namespace {

constexpr Sort I = Sort::one;
constexpr Sort D = Sort::dual;

std::shared_ptr<const Polarity> p2() {
  const std::pair<Point, Point> inc[] = {{0, 0}, {1, 1}};
  return std::make_shared<const Polarity>(2, 2, inc);
}

/// R of sort (1;11) on P2 with the single tuple (x0; x0, x0).
SortedRelation r111(std::shared_ptr<const Polarity> p) {
  return SortedRelation::from_tuples(std::move(p), SortType{I, {I, I}}, {{0, 0, 0}});
}

Subset set_of(std::initializer_list<std::size_t> xs) {
  Subset s;
  for (std::size_t x : xs) s.insert(x);
  return s;
}

GaloisSet g1(std::initializer_list<std::size_t> xs) { return GaloisSet{I, set_of(xs)}; }

Errc error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return Errc::parse_error;
}

std::vector<oracle::Set> to_sets(const std::vector<Subset>& xs) {
  std::vector<oracle::Set> out;
  for (Subset s : xs) out.push_back(oracle::from_subset(s));
  return out;
}

std::vector<GaloisSet> to_galois(const std::vector<oracle::Set>& xs, const std::vector<Sort>& sorts) {
  std::vector<GaloisSet> out;
  for (std::size_t j = 0; j < xs.size(); ++j) out.push_back(GaloisSet{sorts[j], oracle::to_subset(xs[j])});
  return out;
}

/// A seeded suite of (frame, relation) pairs with section-stable relations of
/// arity 1 and 2 and nontrivial Galois duals.
struct Case {
  std::shared_ptr<const Polarity> p;
  SortedRelation r;
};

std::vector<Case> stable_suite(std::uint64_t seed, int count) {
  std::mt19937_64 rng(seed);
  std::vector<Case> out;
  while (static_cast<int>(out.size()) < count) {
    auto p = std::make_shared<const Polarity>(testing::random_polarity(rng, 4));
    const SortType type = testing::random_sort_type(rng, 2);
    SortedRelation r = testing::random_stable_relation(rng, p, type);
    if (r.size() == 0) continue;
    out.push_back({p, std::move(r)});
  }
  return out;
}

/// Arbitrary relations, stable or not.
std::vector<Case> mixed_suite(std::uint64_t seed, int count) {
  std::mt19937_64 rng(seed);
  std::vector<Case> out;
  for (int i = 0; i < count; ++i) {
    auto p = std::make_shared<const Polarity>(testing::random_polarity(rng, 3));
    const SortType type = testing::random_sort_type(rng, 2);
    out.push_back({p, testing::random_relation(rng, p, type, 0.15 + 0.5 * testing::unit(rng))});
  }
  return out;
}

}  // namespace

TEST_CASE("sort types") {
  CHECK(SortType::parse("1;1 1") == SortType{I, {I, I}});
  CHECK(SortType::parse("d;1d") == SortType{D, {I, D}});
  CHECK(SortType::parse("(∂;1,∂)") == SortType{D, {I, D}});
  CHECK(SortType{D, {I, D}}.to_string() == "d;1 d");
  CHECK(error_of([] { SortType::parse("1 1"); }) == Errc::sort_mismatch);
  CHECK(error_of([] { SortType::parse("1;"); }) == Errc::sort_mismatch);
}

TEST_CASE("relation construction errors") {
  auto p = p2();
  CHECK(error_of([&] { SortedRelation::from_tuples(p, SortType{I, {I, I}}, {{0, 0}}); }) == Errc::sort_mismatch);
  CHECK(error_of([&] { SortedRelation::from_tuples(p, SortType{I, {I}}, {{0, 2}}); }) ==
        Errc::index_out_of_range);
  const SortedRelation r = r111(p);
  const std::vector<Point> short_tuple{0};
  CHECK(error_of([&] { r.section(short_tuple); }) == Errc::sort_mismatch);
  const std::vector<Subset> one_arg{set_of({0})};
  CHECK(error_of([&] { image_operator(r, one_arg); }) == Errc::sort_mismatch);
}

TEST_CASE("sections on P2") {
  auto p = p2();
  const SortedRelation empty(p, SortType{I, {I, I}});
  const std::vector<Point> t00{0, 0};
  CHECK(empty.section(t00).empty());
  const SortedRelation r = r111(p);
  CHECK(r.section(t00) == set_of({0}));
  CHECK(r.holds(0, t00));
  CHECK(r.hole_section(0, HoleTuple{{0, 0}, 1}) == set_of({0}));
  CHECK(r.hole_section(1, HoleTuple{{0, 0}, 1}).empty());
  CHECK(r.size() == 1);
  CHECK(r.tuples() == std::vector<std::vector<Point>>{{0, 0, 0}});
}

TEST_CASE("galois dual on P2") {
  auto p = p2();
  const SortedRelation d = galois_dual(r111(p));
  CHECK(d.sort_type() == SortType{D, {I, I}});
  for (Point a = 0; a < 2; ++a) {
    for (Point b = 0; b < 2; ++b) {
      const std::vector<Point> t{a, b};
      CHECK(d.section(t) == (a == 0 && b == 0 ? set_of({0}) : Subset::full(2)));
    }
  }
  const SortedRelation e = galois_dual(SortedRelation(p, SortType{I, {I, I}}));
  CHECK(e.size() == 8);
}

TEST_CASE("image and residual examples on P2") {
  auto p = p2();
  const SortedRelation r = r111(p);
  const std::vector<Subset> x0x0{set_of({0}), set_of({0})};
  const std::vector<Subset> xx{Subset::full(2), Subset::full(2)};
  const std::vector<Subset> empty_first{Subset{}, Subset::full(2)};
  CHECK(image_operator(r, x0x0) == set_of({0}));
  CHECK(image_operator(r, xx) == set_of({0}));
  CHECK(image_operator(r, empty_first).empty());

  CHECK(residual_sets(r, 1, x0x0, set_of({0})) == Subset::full(2));
  CHECK(residual_sets(r, 1, x0x0, Subset{}) == set_of({1}));
  const SortedRelation empty(p, SortType{I, {I, I}});
  CHECK(residual_sets(empty, 0, x0x0, Subset{}) == Subset::full(2));

  const std::vector<GaloisSet> f{g1({0}), g1({0})};
  CHECK(closed_image(r, f) == g1({0}));
  CHECK(residual_galois(r, 1, f, g1({0})) == g1({0, 1}));
  CHECK(residual_galois(empty, 1, f, g1({})) == g1({0, 1}));

  const std::vector<GaloisSet> bad{g1({0}), GaloisSet{D, set_of({0})}};
  CHECK(error_of([&] { closed_image(r, bad); }) == Errc::sort_mismatch);
}

TEST_CASE("closed image of the empty relation is the bottom Galois set") {
  const CanonicalFrame c2 = canonical_polarity(make_chain(2));
  const SortedRelation empty(c2.polarity_ptr(), SortType{I, {I}});
  const StableLattice stable = all_stable_sets(c2.polarity(), I);
  for (Subset s : stable.sets()) {
    const GaloisSet a[] = {GaloisSet{I, s}};
    const GaloisSet out = closed_image(empty, a);
    CHECK(out.members == stable.at(stable.bottom()));
    CHECK_FALSE(out.members.empty());
  }
  const GaloisSet not_galois[] = {GaloisSet{I, Subset{}}};
  CHECK(error_of([&] { closed_image(empty, not_galois); }) == Errc::not_galois);
}

TEST_CASE("conjugate of the empty relation is the bottom co-stable set") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 20; ++i) {
    auto p = std::make_shared<const Polarity>(testing::random_polarity(rng, 4));
    const SortedRelation empty(p, SortType{I, {I, D}});
    const StableLattice ys = all_stable_sets(*p, D);
    for (Subset a : ys.sets()) {
      for (Subset b : ys.sets()) {
        // Place 1 takes sort bar(out) = ∂; the value lives over Y.
        const GaloisSet f[] = {GaloisSet{D, a}, GaloisSet{D, b}};
        CHECK(conjugate_operator(empty, 0, f) == GaloisSet{D, ys.at(ys.bottom())});
      }
    }
  }
}

TEST_CASE("sections_all_stable finds an unstable relation") {
  // Seeded search over 3×3 polarities and relations of sort (1;11).
  std::mt19937_64 rng(20261018);
  std::optional<SortedRelation> found;
  for (int attempt = 0; attempt < 500 && !found; ++attempt) {
    auto p = std::make_shared<const Polarity>(testing::random_polarity(rng, 3, 3, 0.5));
    auto r = testing::random_relation(rng, p, SortType{I, {I, I}}, 0.3);
    if (!sections_all_stable(r).stable) found = r;
  }
  REQUIRE(found);
  const StabilityReport report = sections_all_stable(*found);
  REQUIRE(report.witness);
  CHECK(report.witness->section != report.witness->closure);
  CHECK_FALSE(report.witness->describe().empty());
  CHECK(error_of([&] { conjugate_relation_from(*found, 0); }) == Errc::sections_not_stable);
  const SortedRelation rs[] = {*found};
  CHECK(error_of([&] { complex_algebra(found->polarity(), rs); }) == Errc::sections_not_stable);

  CHECK(sections_all_stable(SortedRelation(found->polarity_ptr(), SortType{I, {I, I}})).stable);
}

TEST_CASE("duals, stability and images against the oracle") {
  for (const auto& [p, r] : mixed_suite(3, 150)) {
    const oracle::Frame f = oracle::Frame::of(*p);
    const oracle::Relation o = oracle::Relation::of(r);
    const oracle::Relation od = oracle::galois_dual(f, o);
    REQUIRE(oracle::Relation::of(galois_dual(r)).tuples == od.tuples);
    REQUIRE(sections_all_stable(r).stable == oracle::sections_stable(f, o));

    std::vector<std::size_t> sizes;
    for (Sort s : r.sort_type().args) sizes.push_back(std::size_t{1} << p->carrier_size(s));
    for (const auto& t : oracle::product(sizes)) {
      std::vector<Subset> w;
      for (std::size_t m : t) w.push_back(Subset(m));
      REQUIRE(image_operator(r, w) == oracle::to_subset(o.image(to_sets(w))));
    }
    for (const auto& t : oracle::galois_tuples(f, r.sort_type().args)) {
      const auto args = to_galois(t, r.sort_type().args);
      REQUIRE(closed_image(r, args).members == oracle::to_subset(oracle::closed_image(f, o, t)));
    }
  }
}

TEST_CASE("residuation on arbitrary subsets") {
  for (const auto& [p, r] : mixed_suite(5, 80)) {
    const oracle::Frame f = oracle::Frame::of(*p);
    const oracle::Relation o = oracle::Relation::of(r);
    const auto& args = r.sort_type().args;
    std::vector<std::size_t> sizes;
    for (Sort s : args) sizes.push_back(std::size_t{1} << p->carrier_size(s));
    const std::size_t nout = p->carrier_size(r.sort_type().out);
    for (std::size_t k = 0; k < args.size(); ++k) {
      for (const auto& t : oracle::product(sizes)) {
        std::vector<Subset> w;
        for (std::size_t m : t) w.push_back(Subset(m));
        for (std::size_t u = 0; u < (std::size_t{1} << nout); ++u) {
          const Subset b = residual_sets(r, k, w, Subset(u));
          REQUIRE(b == oracle::to_subset(oracle::residual_subset(f, o, k, to_sets(w), oracle::from_subset(Subset(u)))));
          // α(W̄[V]_k) ⊆ U iff V ⊆ β(W̄[U]_k), with V = W_k.
          REQUIRE(image_operator(r, w).subset_of(Subset(u)) == w[k].subset_of(b));
        }
      }
    }
  }
}

TEST_CASE("stability implies complete additivity at every place") {
  for (const auto& [p, r] : stable_suite(7, 120)) {
    for (std::size_t k = 0; k < r.arity(); ++k) {
      const AdditivityReport a = check_complete_additivity(r, k);
      REQUIRE_MESSAGE(a.holds, a.witness);
    }
  }
  // The exhaustive check agrees with the oracle on arbitrary relations.
  std::size_t failures = 0;
  for (const auto& [p, r] : mixed_suite(9, 60)) {
    const oracle::Frame f = oracle::Frame::of(*p);
    const oracle::Relation o = oracle::Relation::of(r);
    for (std::size_t k = 0; k < r.arity(); ++k) {
      const bool holds = check_complete_additivity(r, k).holds;
      REQUIRE(holds == oracle::completely_additive(f, o, k));
      failures += holds ? 0 : 1;
    }
  }
  CHECK(failures > 0);
}

TEST_CASE("additivity without stability") {
  // Stability is sufficient, not necessary: relations with an unstable
  // section can still give completely additive closed images.
  std::size_t unstable = 0;
  std::size_t unstable_but_additive = 0;
  for (const auto& [p, r] : mixed_suite(53, 300)) {
    if (sections_all_stable(r).stable) continue;
    ++unstable;
    bool additive = true;
    for (std::size_t k = 0; k < r.arity(); ++k) additive = additive && check_complete_additivity(r, k).holds;
    unstable_but_additive += additive ? 1 : 0;
  }
  MESSAGE(unstable_but_additive << " of " << unstable << " unstable relations are completely additive");
  CHECK(unstable > 0);
  CHECK(unstable_but_additive > 0);
}

TEST_CASE("additivity guard") {
  const CanonicalFrame c4 = canonical_polarity(make_chain(4));
  const SortedRelation r(c4.polarity_ptr(), SortType{I, {I}});
  CHECK(error_of([&] { check_complete_additivity(r, 0, 3); }) == Errc::guard_exceeded);
  CHECK(check_complete_additivity(r, 0, 4).holds);
  CHECK(error_of([&] { check_complete_additivity(r, 1); }) == Errc::index_out_of_range);
}

TEST_CASE("additivity, conjugacy and residuation coincide") {
  std::size_t not_additive = 0;
  for (const auto& [p, r] : mixed_suite(13, 120)) {
    for (std::size_t k = 0; k < r.arity(); ++k) {
      const EquivalenceReport e = additivity_equivalence(r, k);
      REQUIRE(e.agree());
      REQUIRE(e.residual_is_polar_of_conjugate);
      not_additive += e.additive ? 0 : 1;
    }
  }
  CHECK(not_additive > 0);
  for (const auto& [p, r] : stable_suite(17, 60)) {
    for (std::size_t k = 0; k < r.arity(); ++k) {
      const EquivalenceReport e = additivity_equivalence(r, k);
      REQUIRE(e.additive);
      REQUIRE(e.conjugate_law);
      REQUIRE(e.residual_law);
    }
  }
}

TEST_CASE("residual forms and conjugates against the oracle") {
  for (const auto& [p, r] : stable_suite(19, 60)) {
    const oracle::Frame f = oracle::Frame::of(*p);
    const oracle::Relation o = oracle::Relation::of(r);
    const SortType& st = r.sort_type();
    for (std::size_t k = 0; k < r.arity(); ++k) {
      for (const auto& t : oracle::galois_tuples(f, st.args)) {
        const auto e = to_galois(t, st.args);
        for (const auto& g : f.galois_sets(st.out)) {
          const GaloisSet gs{st.out, oracle::to_subset(g)};
          const ResidualForms forms = residual_forms(r, k, e, gs);
          REQUIRE(forms.union_of_galois == forms.union_of_closed);
          REQUIRE(forms.union_of_closed == forms.pointwise);
          REQUIRE(residual_galois(r, k, e, gs).members ==
                  oracle::to_subset(oracle::residual_value(f, o, k, t, g)));
        }
      }
      std::vector<Sort> cargs = st.args;
      cargs[k] = bar(st.out);
      for (const auto& t : oracle::galois_tuples(f, cargs)) {
        const auto args = to_galois(t, cargs);
        const GaloisSet c = conjugate_operator(r, k, args);
        REQUIRE(c.sort == bar(st.args[k]));
        REQUIRE(c.members == oracle::to_subset(oracle::conjugate_value(f, o, k, t)));
      }
    }
  }
}

TEST_CASE("conjugate operators are symmetric") {
  for (const auto& [p, r] : stable_suite(23, 60)) {
    const SortedOperator alpha = closed_image_operator(r);
    for (std::size_t k = 0; k < r.arity(); ++k) {
      const SortedOperator gamma = conjugate_of(alpha, k);
      REQUIRE(conjugacy_law(alpha, gamma, k));
      REQUIRE(conjugacy_law(gamma, alpha, k));
      REQUIRE(conjugate_of(gamma, k) == alpha);
      const SortedOperator beta = residual_of(alpha, k);
      REQUIRE(residuation_law(alpha, beta, k));
    }
  }
}

TEST_CASE("conjugate relations") {
  for (const auto& [p, r] : stable_suite(29, 80)) {
    const oracle::Frame f = oracle::Frame::of(*p);
    for (std::size_t k = 0; k < r.arity(); ++k) {
      const SortedRelation s = conjugate_relation_from(r, k);
      REQUIRE(s.sort_type().out == bar(r.sort_type().args[k]));
      REQUIRE(s.sort_type().args[k] == bar(r.sort_type().out));
      REQUIRE(oracle::Relation::of(s).tuples == oracle::conjugate_relation(f, oracle::Relation::of(r), k).tuples);
      REQUIRE(is_conjugate_pair(r, s, k));
    }
  }

  SUBCASE("unary relation gives a (d;d) conjugate") {
    auto p = p2();
    const SortedRelation r = SortedRelation::from_tuples(p, SortType{I, {I}}, {{0, 0}, {1, 1}});
    const SortedRelation s = conjugate_relation_from(r, 0);
    CHECK(s.sort_type() == SortType{D, {D}});
    const SortedRelation d = galois_dual(r);
    for (Point y = 0; y < 2; ++y) {
      const Subset hole = d.hole_section(y, HoleTuple{{0}, 0});
      for (Point x = 0; x < 2; ++x) {
        const std::vector<Point> t{y};
        CHECK(s.section(t).contains(x) == p->polar(I, hole).contains(x));
      }
    }
  }

  SUBCASE("the empty conjugate fails when the image is nontrivial") {
    auto p = p2();
    const SortedRelation r = r111(p);
    const SortedRelation empty(p, SortType{D, {I, D}});
    CHECK_FALSE(is_conjugate_pair(r, empty, 1));
    CHECK(error_of([&] { is_conjugate_pair(r, empty, 0); }) == Errc::sort_mismatch);
  }

  SUBCASE("empty relation against brute force") {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 20; ++i) {
      auto p = std::make_shared<const Polarity>(testing::random_polarity(rng, 4));
      const SortedRelation r(p, testing::random_sort_type(rng, 2));
      const oracle::Frame f = oracle::Frame::of(*p);
      for (std::size_t k = 0; k < r.arity(); ++k) {
        const SortedRelation s = conjugate_relation_from(r, k);
        CHECK(oracle::Relation::of(s).tuples == oracle::conjugate_relation(f, oracle::Relation::of(r), k).tuples);
        CHECK(is_conjugate_pair(r, s, k));
      }
    }
  }
}

TEST_CASE("goldblatt operator") {
  for (const auto& [p, r] : mixed_suite(37, 100)) {
    const oracle::Frame f = oracle::Frame::of(*p);
    const SortedRelation s = galois_dual(r);
    const oracle::Relation os = oracle::Relation::of(s);
    for (const auto& t : oracle::galois_tuples(f, r.sort_type().args)) {
      const auto args = to_galois(t, r.sort_type().args);
      const GaloisSet g = goldblatt_operator(s, args);
      REQUIRE(g.members == oracle::to_subset(oracle::goldblatt(f, os, t)));
      REQUIRE(g == closed_image(r, args));
    }
  }
  // With Galois sections, F_S is the closed image of S′.
  for (const auto& [p, r] : stable_suite(41, 40)) {
    const SortedRelation s = galois_dual(r);
    const oracle::Frame f = oracle::Frame::of(*p);
    for (const auto& t : oracle::galois_tuples(f, s.sort_type().args)) {
      const auto args = to_galois(t, s.sort_type().args);
      REQUIRE(goldblatt_operator(s, args) == closed_image(galois_dual(s), args));
    }
  }

  SUBCASE("empty S and single closed elements") {
    auto p = p2();
    const SortedRelation empty(p, SortType{D, {I, I}});
    // No tuples in F̄: the meet of the empty family is Y.
    const GaloisSet none[] = {g1({}), g1({0, 1})};
    CHECK(goldblatt_operator(empty, none) == closure(*p, Subset{}, I));
    const GaloisSet x[] = {g1({0, 1}), g1({0, 1})};
    CHECK(goldblatt_operator(empty, x) == g1({0, 1}));
    const SortedRelation s = galois_dual(r111(p));
    const GaloisSet gx0[] = {closed_element(*p, I, 0), closed_element(*p, I, 0)};
    const std::vector<Point> t00{0, 0};
    CHECK(goldblatt_operator(s, gx0).members == p->polar_left(s.section(t00)));
  }
}

TEST_CASE("complex algebras") {
  SUBCASE("identity on C2") {
    const CanonicalFrame c2 = canonical_polarity(make_chain(2));
    // x R x' iff x ⊆ x': the relation of the identity operator.
    std::vector<std::vector<Point>> tuples;
    for (Point a = 0; a < 2; ++a) {
      for (Point b = 0; b < 2; ++b) {
        if (c2.point_set(I, b).subset_of(c2.point_set(I, a))) tuples.push_back({a, b});
      }
    }
    const SortedRelation r = SortedRelation::from_tuples(c2.polarity_ptr(), SortType{I, {I}}, tuples, "dia");
    REQUIRE(sections_all_stable(r).stable);
    const SortedRelation rs[] = {r};
    const LatticeExpansion e = complex_algebra(c2.polarity(), rs);
    REQUIRE(e.lattice.size() == 2);
    REQUIRE(e.operators.size() == 1);
    CHECK(e.operators[0].name() == "dia");
    CHECK(e.operators[0].dtype().to_string() == "(1;1)");
    for (Element a = 0; a < 2; ++a) {
      const Element args[] = {a};
      CHECK(e.operators[0](args) == a);
    }
  }

  SUBCASE("empty binary relation is constantly bottom") {
    std::mt19937_64 rng(43);
    for (int i = 0; i < 10; ++i) {
      auto p = std::make_shared<const Polarity>(testing::random_polarity(rng, 4));
      const SortedRelation rs[] = {SortedRelation(p, SortType{I, {I, I}})};
      const LatticeExpansion e = complex_algebra(*p, rs);
      for (Element v : e.operators[0].table()) CHECK(v == e.lattice.bottom());
    }
  }

  SUBCASE("operators are normal and match the closed images") {
    for (const auto& [p, r] : stable_suite(47, 80)) {
      const SortedRelation rs[] = {r};
      const LatticeExpansion e = complex_algebra(*p, rs);
      const NormalOperator& op = e.operators[0];
      REQUIRE(validate_normal_operator(e.lattice, op).accepted);
      REQUIRE(oracle::is_normal_operator(oracle::Order::of(e.lattice), op));
      const StableLattice stable = all_stable_sets(*p, I);
      const SortType& st = r.sort_type();
      for (const auto& t : oracle::product(std::vector<std::size_t>(r.arity(), stable.size()))) {
        std::vector<GaloisSet> args;
        for (std::size_t j = 0; j < t.size(); ++j) {
          const Subset a = stable.at(t[j]);
          args.push_back(st.args[j] == I ? GaloisSet{I, a} : GaloisSet{D, p->polar_right(a)});
        }
        GaloisSet v = closed_image(r, args);
        if (v.sort == D) v = prime(*p, v);
        REQUIRE(stable.at(op(t)) == v.members);
      }
    }
  }

  SUBCASE("relations on another polarity") {
    auto p = p2();
    const SortedRelation rs[] = {r111(p)};
    const CanonicalFrame c2 = canonical_polarity(make_chain(2));
    CHECK(error_of([&] { complex_algebra(c2.polarity(), rs); }) == Errc::sort_mismatch);
  }
}
