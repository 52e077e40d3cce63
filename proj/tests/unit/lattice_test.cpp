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

#include <random>
#include <utility>
#include <vector>

#include "doctest.h"
#include "oracle.hpp"
#include "polaritykit/error.hpp"
#include "polaritykit/lattice.hpp"
#include "polaritykit/normal_operator.hpp"

using namespace polaritykit;

namespace {

std::vector<Lattice> corpus() {
  return {make_chain(1), make_chain(2), make_chain(3), make_chain(5), make_diamond(2),
          make_diamond(3), make_pentagon(), make_boolean(3)};
}

Errc error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return Errc::parse_error;
}

}  // namespace

TEST_CASE("build_lattice on small orders") {
  SUBCASE("one element") {
    std::vector<std::pair<Element, Element>> pairs{{0, 0}};
    const Lattice l = build_lattice(1, pairs);
    CHECK(l.bottom() == 0);
    CHECK(l.top() == 0);
  }
  SUBCASE("two-chain") {
    std::vector<std::pair<Element, Element>> pairs{{0, 0}, {1, 1}, {0, 1}};
    const Lattice l = build_lattice(2, pairs);
    CHECK(l.leq(0, 1));
    CHECK_FALSE(l.leq(1, 0));
    CHECK(l.meet(0, 1) == 0);
    CHECK(l == make_chain(2));
  }
  SUBCASE("diamond from covers only") {
    std::vector<std::pair<Element, Element>> covers{{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}};
    const Lattice l = build_lattice(5, covers);
    CHECK(l.meet(1, 2) == 0);
    CHECK(l.join(1, 2) == 4);
    CHECK(l == make_diamond(3));
  }
}

TEST_CASE("build_lattice rejects bad orders") {
  std::vector<std::pair<Element, Element>> cycle{{0, 1}, {1, 0}};
  CHECK(error_of([&] { build_lattice(2, cycle); }) == Errc::not_a_partial_order);
  std::vector<std::pair<Element, Element>> none;
  CHECK(error_of([&] { build_lattice(2, none); }) == Errc::not_bounded);
  // 0 < a,b < c,d < 1: a and b have two minimal upper bounds.
  std::vector<std::pair<Element, Element>> bowtie{{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 5}, {4, 5}};
  CHECK(error_of([&] { build_lattice(6, bowtie); }) == Errc::not_a_lattice);
  std::vector<std::pair<Element, Element>> outside{{0, 7}};
  CHECK(error_of([&] { build_lattice(2, outside); }) == Errc::index_out_of_range);
  CHECK(error_of([&] { build_lattice(0, none); }) == Errc::bad_size);
  CHECK(error_of([&] { build_lattice(65, none); }) == Errc::bad_size);
}

TEST_CASE("meet and join agree with scanned bounds and satisfy the lattice laws") {
  for (const Lattice& l : corpus()) {
    const auto o = oracle::Order::of(l);
    const std::size_t n = l.size();
    for (Element a = 0; a < n; ++a) {
      CHECK(l.meet(a, l.top()) == a);
      CHECK(l.join(a, l.bottom()) == a);
      for (Element b = 0; b < n; ++b) {
        CHECK(l.meet(a, b) == *o.glb(a, b));
        CHECK(l.join(a, b) == *o.lub(a, b));
        CHECK(l.meet(a, b) == l.meet(b, a));
        CHECK(l.join(a, l.meet(a, b)) == a);
        CHECK(l.meet(a, l.join(a, b)) == a);
        for (Element c = 0; c < n; ++c) {
          CHECK(l.meet(a, l.meet(b, c)) == l.meet(l.meet(a, b), c));
          CHECK(l.join(a, l.join(b, c)) == l.join(l.join(a, b), c));
        }
      }
      CHECK(l.meet(a, a) == a);
      CHECK(l.join(a, a) == a);
    }
    CHECK(l.meet_all(Subset{}) == l.top());
    CHECK(l.join_all(Subset{}) == l.bottom());
  }
}

TEST_CASE("filters and ideals match a powerset scan") {
  for (const Lattice& l : corpus()) {
    const auto o = oracle::Order::of(l);
    const auto filters = enumerate_filters(l);
    const auto ideals = enumerate_ideals(l);
    REQUIRE(filters.size() == o.filters().size());
    for (std::size_t i = 0; i < filters.size(); ++i) CHECK(oracle::from_subset(filters[i]) == o.filters()[i]);
    REQUIRE(ideals.size() == o.ideals().size());
    for (std::size_t i = 0; i < ideals.size(); ++i) CHECK(oracle::from_subset(ideals[i]) == o.ideals()[i]);
    CHECK(filters.size() == l.size());
    // a ↦ ↑a reverses the order.
    for (Element a = 0; a < l.size(); ++a) {
      for (Element b = 0; b < l.size(); ++b) CHECK(l.leq(a, b) == l.up(b).subset_of(l.up(a)));
    }
  }
}

TEST_CASE("named filter and ideal examples") {
  const Lattice c2 = make_chain(2);
  CHECK(enumerate_filters(c2) == std::vector<Subset>{Subset(0b10), Subset(0b11)});
  CHECK(enumerate_ideals(c2) == std::vector<Subset>{Subset(0b01), Subset(0b11)});
  const Lattice m3 = make_diamond(3);
  const auto filters = enumerate_filters(m3);
  CHECK(filters.size() == 5);
  for (Element a = 0; a < 5; ++a) CHECK(std::find(filters.begin(), filters.end(), m3.up(a)) != filters.end());
}

TEST_CASE("generated filters and ideals are the least ones") {
  for (const Lattice& l : corpus()) {
    if (l.size() > 8) continue;
    const auto o = oracle::Order::of(l);
    for (const auto& s : oracle::powerset(l.size())) {
      if (s.empty()) continue;
      CHECK(oracle::from_subset(generate_filter(l, oracle::to_subset(s))) == o.generated_filter(s));
      CHECK(oracle::from_subset(generate_ideal(l, oracle::to_subset(s))) == o.generated_ideal(s));
    }
    CHECK(generate_filter(l, Subset{}) == Subset::singleton(l.top()));
    CHECK(generate_ideal(l, Subset{}) == Subset::singleton(l.bottom()));
  }
}

TEST_CASE("validator on the named operators") {
  SUBCASE("min on C3 with (1,1;1)") {
    std::vector<Element> table;
    for (Element a = 0; a < 3; ++a) {
      for (Element c = 0; c < 3; ++c) table.push_back(std::min(a, c));
    }
    NormalOperator op("o", DistributionType::parse("(1,1;1)"), 3, table);
    CHECK(validate_normal_operator(make_chain(3), op).accepted);
  }
  SUBCASE("residuum on C3 with (1,d;d)") {
    const auto e = make_flew_chain(3, ChainKind::godel);
    CHECK(validate_normal_operator(e.lattice, *e.find("->")).accepted);
  }
  SUBCASE("identity on C2 with (d;1) fails at place 1") {
    NormalOperator op("id", DistributionType::parse("(d;1)"), 2, {0, 1});
    const auto report = validate_normal_operator(make_chain(2), op);
    CHECK_FALSE(report.accepted);
    REQUIRE(report.first_failure());
    CHECK(report.first_failure()->place == 0);
    CHECK_FALSE(report.first_failure()->counterexample.empty());
  }
  SUBCASE("table size and lattice size are checked") {
    CHECK(error_of([] { NormalOperator("f", DistributionType::parse("1;1"), 2, {0}); }) == Errc::arity_mismatch);
    CHECK(error_of([] { NormalOperator("f", DistributionType::parse("1;1"), 2, {0, 5}); }) ==
          Errc::index_out_of_range);
    NormalOperator op("f", DistributionType::parse("1;1"), 3, {0, 1, 2});
    CHECK(error_of([&] { validate_normal_operator(make_chain(2), op); }) == Errc::arity_mismatch);
  }
}

TEST_CASE("validator agrees with the definition on random tables") {
  std::mt19937_64 rng(20261018);
  const std::vector<Lattice> lattices{make_chain(2), make_chain(3), make_diamond(2), make_pentagon()};
  const std::vector<std::string> types{"1;1", "d;1", "1;d", "d;d", "1,1;1", "1,d;d", "d,1;1", "d,d;d"};
  std::size_t accepted = 0;
  for (int round = 0; round < 400; ++round) {
    const Lattice& l = lattices[rng() % lattices.size()];
    const auto o = oracle::Order::of(l);
    const DistributionType dt = DistributionType::parse(types[rng() % types.size()]);
    std::size_t entries = 1;
    for (std::size_t j = 0; j < dt.arity(); ++j) entries *= l.size();
    std::vector<Element> table(entries);
    // Bias towards meets/joins of the arguments so that some tables pass.
    for (std::size_t i = 0; i < entries; ++i) table[i] = rng() % l.size();
    if (round % 2 == 0) {
      const auto tuples = oracle::product(std::vector<std::size_t>(dt.arity(), l.size()));
      for (std::size_t i = 0; i < entries; ++i) {
        Element v = l.bottom_in(dt.out);
        for (std::size_t j = 0; j < dt.arity(); ++j) {
          const Element a = tuples[i][j];
          // Turn the argument into the output sort: flip when the sorts differ.
          Element image = dt.args[j] == dt.out ? a : (l.size() == 2 ? 1 - a : a);
          v = l.join_in(dt.out, v, image);
        }
        table[i] = v;
      }
    }
    NormalOperator op("f", dt, l.size(), table);
    const bool expected = oracle::is_normal_operator(o, op);
    CHECK(validate_normal_operator(l, op).accepted == expected);
    if (expected) ++accepted;
  }
  CHECK(accepted > 0);
}

TEST_CASE("FL_ew chains") {
  SUBCASE("two-valued Gödel chain is classical") {
    const auto e = make_flew_chain(2, ChainKind::godel);
    const auto& prod = *e.find("o");
    const auto& imp = *e.find("->");
    for (Element a = 0; a < 2; ++a) {
      for (Element c = 0; c < 2; ++c) {
        std::vector<Element> t{a, c};
        CHECK(prod(t) == (a & c));
        CHECK(imp(t) == ((1 - a) | c));
      }
    }
  }
  SUBCASE("three-element values") {
    const auto g = make_flew_chain(3, ChainKind::godel);
    CHECK((*g.find("o"))(std::vector<Element>{1, 1}) == 1);
    CHECK((*g.find("->"))(std::vector<Element>{1, 0}) == 0);
    const auto l = make_flew_chain(3, ChainKind::lukasiewicz);
    CHECK((*l.find("o"))(std::vector<Element>{1, 1}) == 0);
    CHECK(g.element_name(1) == "1/2");
  }
  SUBCASE("residuation and distribution types on every chain") {
    for (std::size_t n = 2; n <= 6; ++n) {
      for (ChainKind kind : {ChainKind::godel, ChainKind::lukasiewicz}) {
        const auto e = make_flew_chain(n, kind);
        const auto& prod = *e.find("o");
        const auto& imp = *e.find("->");
        CHECK(prod.dtype().to_string() == "(1,1;1)");
        CHECK(imp.dtype().to_string() == "(1,d;d)");
        const auto o = oracle::Order::of(e.lattice);
        CHECK(oracle::is_normal_operator(o, prod));
        CHECK(oracle::is_normal_operator(o, imp));
        for (Element a = 0; a < n; ++a) {
          for (Element b = 0; b < n; ++b) {
            for (Element c = 0; c < n; ++c) {
              CHECK((prod(std::vector<Element>{a, c}) <= b) == (c <= imp(std::vector<Element>{a, b})));
            }
          }
        }
      }
    }
  }
  CHECK(error_of([] { make_flew_chain(1, ChainKind::godel); }) == Errc::bad_size);
}

TEST_CASE("expansions reject operators that fail validation") {
  // The identity is a valid box (d;d); as (d;1) it must turn meets into joins.
  NormalOperator box("id", DistributionType::parse("d;d"), 2, {0, 1});
  CHECK(validate_normal_operator(make_chain(2), box).accepted);
  NormalOperator op("id", DistributionType::parse("d;1"), 2, {0, 1});
  try {
    make_expansion(make_chain(2), {op});
    FAIL("expected a validation error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::validation_error);
    CHECK(std::string(e.what()).find("place 1") != std::string::npos);
  }
}

TEST_CASE("De Morgan examples carry both distribution types") {
  for (const auto& e : {make_de_morgan_chain(3), make_de_morgan_chain(4), make_boolean_negation()}) {
    const auto o = oracle::Order::of(e.lattice);
    REQUIRE(e.find("neg"));
    REQUIRE(e.find("negd"));
    CHECK(e.find("neg")->dtype().to_string() == "(1;d)");
    CHECK(e.find("negd")->dtype().to_string() == "(d;1)");
    CHECK(oracle::is_normal_operator(o, *e.find("neg")));
    CHECK(oracle::is_normal_operator(o, *e.find("negd")));
  }
}

TEST_CASE("distribution type text") {
  CHECK(DistributionType::parse("(1,∂;∂)").to_string() == "(1,d;d)");
  CHECK(DistributionType::parse("1 d ; d").to_string() == "(1,d;d)");
  CHECK(DistributionType::parse(";1").arity() == 0);
  CHECK(error_of([] { DistributionType::parse("1,1"); }) == Errc::sort_mismatch);
  CHECK(error_of([] { DistributionType::parse("1;x"); }) == Errc::sort_mismatch);
}
