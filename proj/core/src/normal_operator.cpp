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

#include "polaritykit/normal_operator.hpp"

#include <sstream>

#include "polaritykit/error.hpp"
#include "polaritykit/tuples.hpp"

namespace polaritykit {

namespace {

std::string tuple_text(std::span<const Element> t) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < t.size(); ++i) os << (i ? "," : "") << t[i];
  os << ")";
  return os.str();
}

std::size_t power(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) r *= base;
  return r;
}

}  // namespace

std::string DistributionType::to_string() const {
  return "(" + sorts_to_string(args, ",") + ";" + std::string(glyph(out)) + ")";
}

DistributionType DistributionType::parse(std::string_view text) {
  std::string_view body = text;
  while (!body.empty() && body.front() == ' ') body.remove_prefix(1);
  while (!body.empty() && body.back() == ' ') body.remove_suffix(1);
  if (!body.empty() && body.front() == '(') {
    if (body.back() != ')') throw Error(Errc::sort_mismatch, "unbalanced parentheses in '" + std::string(text) + "'");
    body = body.substr(1, body.size() - 2);
  }
  std::size_t semi = body.find(';');
  if (semi == std::string_view::npos) {
    throw Error(Errc::sort_mismatch, "distribution type '" + std::string(text) + "' lacks ';'");
  }
  DistributionType dt;
  dt.args = parse_sorts(body.substr(0, semi));
  auto out = parse_sorts(body.substr(semi + 1));
  if (out.size() != 1) {
    throw Error(Errc::sort_mismatch, "distribution type '" + std::string(text) + "' needs one output sort");
  }
  dt.out = out.front();
  return dt;
}

NormalOperator::NormalOperator(std::string name, DistributionType dtype, std::size_t lattice_size,
                               std::vector<Element> table)
    : name_(std::move(name)), dtype_(std::move(dtype)), lattice_size_(lattice_size), table_(std::move(table)) {
  const std::size_t expected = power(lattice_size_, dtype_.arity());
  if (table_.size() != expected) {
    throw Error(Errc::arity_mismatch, "operator '" + name_ + "' has " + std::to_string(table_.size()) +
                                          " table entries, expected " + std::to_string(expected));
  }
  for (Element v : table_) {
    if (v >= lattice_size_) {
      throw Error(Errc::index_out_of_range, "operator '" + name_ + "' maps to element " + std::to_string(v));
    }
  }
}

Element NormalOperator::operator()(std::span<const Element> args) const {
  std::size_t index = 0;
  for (Element a : args) index = index * lattice_size_ + a;
  return table_[index];
}

std::optional<PlaceCheck> ValidationReport::first_failure() const {
  for (const auto& p : places) {
    if (!p.passed()) return p;
  }
  return std::nullopt;
}

ValidationReport validate_normal_operator(const Lattice& lattice, const NormalOperator& op) {
  if (op.lattice_size() != lattice.size()) {
    throw Error(Errc::arity_mismatch, "operator '" + op.name() + "' was built for a lattice of size " +
                                          std::to_string(op.lattice_size()));
  }
  const std::size_t n = op.arity();
  const std::size_t size = lattice.size();
  const Sort out = op.dtype().out;
  ValidationReport report;
  std::vector<std::size_t> radices(n, size);
  for (std::size_t place = 0; place < n; ++place) {
    const Sort in = op.dtype().args[place];
    PlaceCheck check;
    check.place = place;
    for_each_tuple(radices, [&](std::span<const std::size_t> ctx) {
      if (!check.passed()) return;
      std::vector<Element> args(ctx.begin(), ctx.end());
      args[place] = lattice.bottom_in(in);
      if (op(args) != lattice.bottom_in(out)) {
        check.normal = false;
        check.counterexample = "f" + tuple_text(args) + " = " + std::to_string(op(args)) +
                               " is not the bottom of the output lattice";
        return;
      }
      for (Element a = 0; a < size && check.distributes; ++a) {
        for (Element b = a + 1; b < size; ++b) {
          args[place] = a;
          const Element fa = op(args);
          args[place] = b;
          const Element fb = op(args);
          args[place] = lattice.join_in(in, a, b);
          const Element fab = op(args);
          if (fab != lattice.join_in(out, fa, fb)) {
            check.distributes = false;
            std::vector<Element> shown(ctx.begin(), ctx.end());
            shown[place] = a;
            check.counterexample = "place " + std::to_string(place + 1) + ": f at " + tuple_text(shown) +
                                   " joined with argument " + std::to_string(b) + " gives " +
                                   std::to_string(fab) + ", expected " +
                                   std::to_string(lattice.join_in(out, fa, fb));
            break;
          }
        }
      }
    });
    if (!check.passed()) report.accepted = false;
    report.places.push_back(std::move(check));
  }
  return report;
}

const NormalOperator* LatticeExpansion::find(std::string_view name) const {
  for (const auto& op : operators) {
    if (op.name() == name) return &op;
  }
  return nullptr;
}

std::string LatticeExpansion::element_name(Element e) const {
  return element_names.empty() ? std::to_string(e) : element_names[e];
}

LatticeExpansion make_expansion(Lattice lattice, std::vector<NormalOperator> operators,
                                std::vector<std::string> element_names) {
  if (!element_names.empty() && element_names.size() != lattice.size()) {
    throw Error(Errc::bad_size, "expected " + std::to_string(lattice.size()) + " element names, got " +
                                    std::to_string(element_names.size()));
  }
  for (const auto& op : operators) {
    auto report = validate_normal_operator(lattice, op);
    if (auto failure = report.first_failure()) {
      throw Error(Errc::validation_error, "operator '" + op.name() + "' of type " + op.dtype().to_string() +
                                              " fails at place " + std::to_string(failure->place + 1) + ": " +
                                              failure->counterexample);
    }
  }
  return LatticeExpansion{std::move(lattice), std::move(operators), std::move(element_names)};
}

namespace {

std::vector<std::string> fraction_names(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) {
    if (i == 0) {
      names.emplace_back("0");
    } else if (i + 1 == n) {
      names.emplace_back("1");
    } else {
      names.push_back(std::to_string(i) + "/" + std::to_string(n - 1));
    }
  }
  return names;
}

}  // namespace

LatticeExpansion make_flew_chain(std::size_t n, ChainKind kind) {
  if (n < 2) throw Error(Errc::bad_size, "FL_ew chain needs at least 2 elements");
  const std::size_t top = n - 1;
  std::vector<Element> product(n * n), implication(n * n);
  for (Element a = 0; a < n; ++a) {
    for (Element c = 0; c < n; ++c) {
      if (kind == ChainKind::godel) {
        product[a * n + c] = std::min(a, c);
        implication[a * n + c] = a <= c ? top : c;
      } else {
        product[a * n + c] = a + c > top ? a + c - top : 0;
        implication[a * n + c] = std::min(top, top - a + c);
      }
    }
  }
  std::vector<NormalOperator> ops;
  ops.emplace_back("o", DistributionType{{Sort::one, Sort::one}, Sort::one}, n, std::move(product));
  ops.emplace_back("->", DistributionType{{Sort::one, Sort::dual}, Sort::dual}, n, std::move(implication));
  return make_expansion(make_chain(n), std::move(ops), fraction_names(n));
}

LatticeExpansion make_de_morgan_chain(std::size_t n) {
  if (n < 2) throw Error(Errc::bad_size, "De Morgan chain needs at least 2 elements");
  std::vector<Element> neg(n);
  for (Element a = 0; a < n; ++a) neg[a] = n - 1 - a;
  std::vector<NormalOperator> ops;
  ops.emplace_back("neg", DistributionType{{Sort::one}, Sort::dual}, n, neg);
  ops.emplace_back("negd", DistributionType{{Sort::dual}, Sort::one}, n, neg);
  return make_expansion(make_chain(n), std::move(ops), fraction_names(n));
}

LatticeExpansion make_boolean_negation() {
  // Element i is the bitmask i over two atoms; complement flips both bits.
  std::vector<Element> neg = {3, 2, 1, 0};
  std::vector<NormalOperator> ops;
  ops.emplace_back("neg", DistributionType{{Sort::one}, Sort::dual}, 4, neg);
  ops.emplace_back("negd", DistributionType{{Sort::dual}, Sort::one}, 4, neg);
  return make_expansion(make_boolean(2), std::move(ops), {"0", "a", "b", "1"});
}

}  // namespace polaritykit
