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

#include "polaritykit/io.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <optional>
#include <random>
#include <set>

#include "json.hpp"
#include "polaritykit/error.hpp"
#include "polaritykit/tuples.hpp"

namespace polaritykit::io {

namespace {

struct Token {
  std::string_view text;
  std::size_t column = 1;  // 1-based byte column
};

struct Line {
  std::size_t number = 1;
  std::vector<Token> tokens;
};

/// Non-empty lines with comments stripped.
std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string_view raw = text.substr(start, end - start);
    if (const std::size_t hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t' || raw[i] == '\r')) ++i;
      const std::size_t begin = i;
      while (i < raw.size() && raw[i] != ' ' && raw[i] != '\t' && raw[i] != '\r') ++i;
      if (i > begin) line.tokens.push_back({raw.substr(begin, i - begin), begin + 1});
    }
    if (!line.tokens.empty()) out.push_back(std::move(line));
    start = end + 1;
  }
  return out;
}

[[noreturn]] void fail(const Line& line, const Token& at, const std::string& message) {
  throw ParseError(line.number, at.column, message);
}

[[noreturn]] void fail_at_end(const Line& line, const std::string& message) {
  const Token& last = line.tokens.back();
  throw ParseError(line.number, last.column + last.text.size(), message);
}

std::optional<std::size_t> to_number(std::string_view s) {
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

std::size_t number_at(const Line& line, std::size_t i, std::string_view what) {
  if (i >= line.tokens.size()) fail_at_end(line, "expected " + std::string(what));
  const auto n = to_number(line.tokens[i].text);
  if (!n) fail(line, line.tokens[i], "expected " + std::string(what) + ", got '" + std::string(line.tokens[i].text) + "'");
  return *n;
}

/// Tokens i.. joined by single spaces.
std::string rest_of(const Line& line, std::size_t i) {
  std::string out;
  for (; i < line.tokens.size(); ++i) {
    if (!out.empty()) out += ' ';
    out += line.tokens[i].text;
  }
  return out;
}

std::string position(const Line& line, const Token& t) {
  return "line " + std::to_string(line.number) + ", column " + std::to_string(t.column) + ": ";
}

/// Names of one carrier; lookups fall back to decimal indices.
struct Names {
  std::vector<std::string> names;
  std::map<std::string, std::size_t, std::less<>> index;

  void set(const Line& line, std::size_t size, std::string_view what) {
    if (!names.empty()) fail(line, line.tokens[0], "duplicate " + std::string(what) + " line");
    if (line.tokens.size() - 1 != size) {
      fail(line, line.tokens[0], "expected " + std::to_string(size) + " names, got " +
                                     std::to_string(line.tokens.size() - 1));
    }
    for (std::size_t i = 1; i < line.tokens.size(); ++i) {
      const std::string name(line.tokens[i].text);
      if (!index.emplace(name, i - 1).second) fail(line, line.tokens[i], "duplicate name '" + name + "'");
      names.push_back(name);
    }
  }

  std::optional<std::size_t> find(std::string_view token, std::size_t size) const {
    if (auto it = index.find(token); it != index.end()) return it->second;
    if (auto n = to_number(token); n && *n < size) return *n;
    return std::nullopt;
  }
};

std::string strip_parens(std::string s) {
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
  return s;
}

double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

void require_density(double density) {
  if (!(density >= 0.0 && density <= 1.0)) {
    throw Error(Errc::validation_error, "density " + std::to_string(density) + " is outside [0, 1]");
  }
}

nlohmann::ordered_json to_json(const Report& r, bool timings) {
  nlohmann::ordered_json j;
  j["name"] = r.name;
  j["passed"] = r.passed;
  j["detail"] = r.detail;
  j["witness"] = r.witness;
  if (timings && r.millis) j["millis"] = *r.millis;
  j["children"] = nlohmann::ordered_json::array();
  for (const Report& c : r.children) j["children"].push_back(to_json(c, timings));
  return j;
}

void render_text_into(const Report& r, std::size_t depth, std::string& out) {
  const std::string indent(2 * depth, ' ');
  out += indent + (r.passed ? "[PASS] " : "[FAIL] ") + r.name;
  if (!r.detail.empty()) out += ": " + r.detail;
  out += '\n';
  for (const std::string& w : r.witness) out += indent + "    witness: " + w + '\n';
  for (const Report& c : r.children) render_text_into(c, depth + 1, out);
}

}  // namespace

DocKind detect_kind(std::string_view text) {
  const auto lines = tokenize(text);
  if (lines.empty()) throw ParseError(1, 1, "empty document");
  const Line& first = lines.front();
  const std::string_view k = first.tokens[0].text;
  if (k == "lattice") return DocKind::lattice;
  if (k == "polarity") return DocKind::frame;
  fail(first, first.tokens[0], "expected 'lattice' or 'polarity', got '" + std::string(k) + "'");
}

LatticeExpansion parse_lattice_doc(std::string_view text) {
  const auto lines = tokenize(text);
  if (lines.empty()) throw ParseError(1, 1, "empty document");
  struct OpBlock {
    const Line* line;
    std::string name;
    DistributionType dtype;
    std::vector<Element> table;
    std::size_t rows = 0;
  };
  std::optional<std::size_t> size;
  Names names;
  std::vector<std::pair<Element, Element>> pairs;
  std::vector<OpBlock> ops;

  auto element = [&](const Line& line, std::size_t i) -> Element {
    if (i >= line.tokens.size()) fail_at_end(line, "expected an element");
    const auto e = names.find(line.tokens[i].text, *size);
    if (!e) fail(line, line.tokens[i], "unknown element '" + std::string(line.tokens[i].text) + "'");
    return *e;
  };
  auto expect_count = [](const Line& line, std::size_t n) {
    if (line.tokens.size() > n) fail(line, line.tokens[n], "unexpected token '" + std::string(line.tokens[n].text) + "'");
  };

  for (const Line& line : lines) {
    const std::string_view key = line.tokens[0].text;
    if (!size && key != "lattice") fail(line, line.tokens[0], "expected 'lattice N' first");
    if (key == "lattice") {
      if (size) fail(line, line.tokens[0], "duplicate 'lattice' line");
      size = number_at(line, 1, "the lattice size");
      if (*size == 0 || *size > Subset::kMaxCarrier) fail(line, line.tokens[1], "lattice size must be 1..64");
      expect_count(line, 2);
    } else if (key == "elements") {
      names.set(line, *size, "elements");
    } else if (key == "leq") {
      const Element a = element(line, 1);
      const Element b = element(line, 2);
      expect_count(line, 3);
      pairs.emplace_back(a, b);
    } else if (key == "op") {
      if (line.tokens.size() < 3) fail_at_end(line, "expected 'op NAME TYPE'");
      const std::string name(line.tokens[1].text);
      for (const auto& op : ops) {
        if (op.name == name) fail(line, line.tokens[1], "duplicate operator '" + name + "'");
      }
      DistributionType dt;
      try {
        dt = DistributionType::parse(rest_of(line, 2));
      } catch (const Error& e) {
        fail(line, line.tokens[2], e.what());
      }
      if (dt.arity() == 0) fail(line, line.tokens[2], "operator needs at least one argument");
      ops.push_back({&line, name, dt, {}, 0});
    } else if (key == "row") {
      if (ops.empty()) fail(line, line.tokens[0], "'row' before any 'op'");
      if (line.tokens.size() - 1 != *size) {
        fail(line, line.tokens[0], "expected " + std::to_string(*size) + " entries, got " +
                                       std::to_string(line.tokens.size() - 1));
      }
      for (std::size_t i = 1; i < line.tokens.size(); ++i) ops.back().table.push_back(element(line, i));
      ++ops.back().rows;
    } else {
      fail(line, line.tokens[0], "unknown keyword '" + std::string(key) + "'");
    }
  }

  for (const OpBlock& op : ops) {
    std::size_t expected = 1;
    for (std::size_t j = 1; j < op.dtype.arity(); ++j) expected *= *size;
    if (op.rows != expected) {
      fail(*op.line, op.line->tokens[1], "operator '" + op.name + "' needs " + std::to_string(expected) +
                                             " rows, got " + std::to_string(op.rows));
    }
  }
  Lattice lattice;
  try {
    lattice = build_lattice(*size, pairs);
  } catch (const Error& e) {
    throw Error(Errc::validation_error, std::string("the order is not a lattice: ") + e.what());
  }
  std::vector<NormalOperator> operators;
  for (OpBlock& op : ops) operators.emplace_back(op.name, op.dtype, *size, std::move(op.table));
  return make_expansion(std::move(lattice), std::move(operators), names.names);
}

std::string serialize_lattice_doc(const LatticeExpansion& e) {
  const Lattice& l = e.lattice;
  std::string out = "lattice " + std::to_string(l.size()) + "\n";
  if (!e.element_names.empty()) {
    out += "elements";
    for (const auto& n : e.element_names) out += " " + n;
    out += "\n";
  }
  for (const auto& [a, b] : l.covers()) out += "leq " + e.element_name(a) + " " + e.element_name(b) + "\n";
  for (const NormalOperator& f : e.operators) {
    out += "op " + f.name() + " " + strip_parens(f.dtype().to_string()) + "\n";
    const auto& table = f.table();
    for (std::size_t i = 0; i < table.size(); i += l.size()) {
      out += "row";
      for (std::size_t j = 0; j < l.size(); ++j) out += " " + e.element_name(table[i + j]);
      out += "\n";
    }
  }
  return out;
}

std::string FrameDoc::point_name(Sort s, Point p) const {
  const auto& names = s == Sort::one ? xnames : ynames;
  return names.empty() ? std::to_string(p) : names[p];
}

FrameDoc parse_frame_doc(std::string_view text) {
  const auto lines = tokenize(text);
  if (lines.empty()) throw ParseError(1, 1, "empty document");
  struct RelationBlock {
    const Line* line;
    std::string name;
    SortType type;
    std::vector<std::vector<Point>> tuples;
  };
  std::optional<std::pair<std::size_t, std::size_t>> sizes;
  Names xs;
  Names ys;
  std::vector<std::pair<Point, Point>> incidence;
  std::vector<RelationBlock> relations;

  auto point = [&](const Line& line, std::size_t i, Sort s) -> Point {
    if (i >= line.tokens.size()) fail_at_end(line, std::string("expected a point of sort ") + std::string(glyph(s)));
    const Token& t = line.tokens[i];
    const Names& own = s == Sort::one ? xs : ys;
    const Names& other = s == Sort::one ? ys : xs;
    const std::size_t n = s == Sort::one ? sizes->first : sizes->second;
    if (auto p = own.find(t.text, n)) return *p;
    if (other.index.count(t.text)) {
      throw Error(Errc::sort_mismatch, position(line, t) + "'" + std::string(t.text) + "' is a point of " +
                                           (s == Sort::one ? "Y" : "X") + " in a place of sort " +
                                           std::string(glyph(s)));
    }
    if (to_number(t.text)) {
      throw Error(Errc::index_out_of_range, position(line, t) + "index " + std::string(t.text) + " is outside " +
                                                (s == Sort::one ? "X" : "Y"));
    }
    fail(line, t, "unknown point '" + std::string(t.text) + "'");
  };

  for (const Line& line : lines) {
    const std::string_view key = line.tokens[0].text;
    if (!sizes && key != "polarity") fail(line, line.tokens[0], "expected 'polarity NX NY' first");
    if (key == "polarity") {
      if (sizes) fail(line, line.tokens[0], "duplicate 'polarity' line");
      const std::size_t nx = number_at(line, 1, "the size of X");
      const std::size_t ny = number_at(line, 2, "the size of Y");
      if (nx > Subset::kMaxCarrier || ny > Subset::kMaxCarrier) fail(line, line.tokens[1], "carriers hold at most 64 points");
      if (line.tokens.size() > 3) fail(line, line.tokens[3], "unexpected token");
      sizes = {nx, ny};
    } else if (key == "xnames") {
      xs.set(line, sizes->first, "xnames");
    } else if (key == "ynames") {
      ys.set(line, sizes->second, "ynames");
    } else if (key == "inc") {
      const Point x = point(line, 1, Sort::one);
      const Point y = point(line, 2, Sort::dual);
      if (line.tokens.size() > 3) fail(line, line.tokens[3], "unexpected token");
      incidence.emplace_back(x, y);
    } else if (key == "relation") {
      if (line.tokens.size() < 3) fail_at_end(line, "expected 'relation NAME TYPE'");
      const std::string name(line.tokens[1].text);
      for (const auto& r : relations) {
        if (r.name == name) fail(line, line.tokens[1], "duplicate relation '" + name + "'");
      }
      SortType st;
      try {
        st = SortType::parse(rest_of(line, 2));
      } catch (const Error& e) {
        fail(line, line.tokens[2], e.what());
      }
      relations.push_back({&line, name, st, {}});
    } else if (key == "t") {
      if (relations.empty()) fail(line, line.tokens[0], "'t' before any 'relation'");
      const SortType& st = relations.back().type;
      if (line.tokens.size() - 1 != st.arity() + 1) {
        throw Error(Errc::sort_mismatch, position(line, line.tokens[0]) + "relation '" + relations.back().name +
                                             "' of sort type " + st.to_string() + " needs " +
                                             std::to_string(st.arity() + 1) + " points per tuple");
      }
      std::vector<Point> t{point(line, 1, st.out)};
      for (std::size_t j = 0; j < st.arity(); ++j) t.push_back(point(line, j + 2, st.args[j]));
      relations.back().tuples.push_back(std::move(t));
    } else {
      fail(line, line.tokens[0], "unknown keyword '" + std::string(key) + "'");
    }
  }

  FrameDoc doc;
  doc.polarity = std::make_shared<const Polarity>(sizes->first, sizes->second, incidence);
  doc.xnames = xs.names;
  doc.ynames = ys.names;
  for (const auto& r : relations) {
    doc.relations.push_back(SortedRelation::from_tuples(doc.polarity, r.type, r.tuples, r.name));
  }
  return doc;
}

std::string serialize_frame_doc(const FrameDoc& doc) {
  const Polarity& p = *doc.polarity;
  std::string out = "polarity " + std::to_string(p.nx()) + " " + std::to_string(p.ny()) + "\n";
  if (!doc.xnames.empty()) {
    out += "xnames";
    for (const auto& n : doc.xnames) out += " " + n;
    out += "\n";
  }
  if (!doc.ynames.empty()) {
    out += "ynames";
    for (const auto& n : doc.ynames) out += " " + n;
    out += "\n";
  }
  for (const auto& [x, y] : p.incidence_pairs()) {
    out += "inc " + doc.point_name(Sort::one, x) + " " + doc.point_name(Sort::dual, y) + "\n";
  }
  for (const SortedRelation& r : doc.relations) {
    const SortType& st = r.sort_type();
    out += "relation " + r.name() + " " + st.to_string() + "\n";
    for (const auto& t : r.tuples()) {
      out += "t " + doc.point_name(st.out, t[0]);
      for (std::size_t j = 0; j < st.arity(); ++j) out += " " + doc.point_name(st.args[j], t[j + 1]);
      out += "\n";
    }
  }
  return out;
}

Polarity random_polarity(std::uint64_t seed, std::size_t nx, std::size_t ny, double density) {
  require_density(density);
  if (nx > Subset::kMaxCarrier || ny > Subset::kMaxCarrier) {
    throw Error(Errc::bad_size, "carriers hold at most 64 points");
  }
  std::mt19937_64 rng(seed);
  std::vector<std::pair<Point, Point>> incidence;
  for (Point x = 0; x < nx; ++x) {
    for (Point y = 0; y < ny; ++y) {
      if (unit(rng) < density) incidence.emplace_back(x, y);
    }
  }
  return Polarity(nx, ny, incidence);
}

Lattice random_lattice(std::uint64_t seed, std::size_t n) {
  if (n == 0 || n > Subset::kMaxCarrier) throw Error(Errc::bad_size, "lattice size must be 1..64");
  std::mt19937_64 rng(seed);
  const Subset ground = Subset::full(n);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::set<Subset> family{ground};
    for (int tries = 0; tries < 64 && family.size() < n; ++tries) {
      const Subset s(rng() & ground.mask());
      std::set<Subset> next = family;
      next.insert(s);
      for (Subset f : family) next.insert(f & s);
      if (next.size() <= n) family = std::move(next);
    }
    if (family.size() != n) continue;
    std::vector<Subset> sets(family.begin(), family.end());
    std::stable_sort(sets.begin(), sets.end(), [](Subset a, Subset b) { return a.count() < b.count(); });
    std::vector<std::pair<Element, Element>> pairs;
    for (Element a = 0; a < n; ++a) {
      for (Element b = 0; b < n; ++b) {
        if (a != b && sets[a].subset_of(sets[b])) pairs.emplace_back(a, b);
      }
    }
    return build_lattice(n, pairs);
  }
  throw Error(Errc::generation_failed, "no " + std::to_string(n) + "-element lattice after 1000 attempts");
}

SortedRelation random_relation(std::uint64_t seed, std::shared_ptr<const Polarity> p, const SortType& type,
                               double density, std::string name) {
  require_density(density);
  std::mt19937_64 rng(seed);
  std::vector<std::size_t> radices{p->carrier_size(type.out)};
  for (Sort s : type.args) radices.push_back(p->carrier_size(s));
  std::vector<std::vector<Point>> tuples;
  for_each_tuple(radices, [&](std::span<const std::size_t> t) {
    if (unit(rng) < density) tuples.emplace_back(t.begin(), t.end());
  });
  return SortedRelation::from_tuples(std::move(p), type, tuples, std::move(name));
}

std::string render_text(const Report& r) {
  std::string out;
  render_text_into(r, 0, out);
  return out;
}

std::string render_json(const Report& r, bool timings) {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["report"] = to_json(r, timings);
  return j.dump(2) + "\n";
}

}  // namespace polaritykit::io
