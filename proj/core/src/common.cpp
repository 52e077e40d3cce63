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

#include <charconv>
#include <cstdlib>
#include <string>

#include "polaritykit/error.hpp"
#include "polaritykit/guards.hpp"
#include "polaritykit/sort.hpp"
#include "polaritykit/tuples.hpp"

namespace polaritykit {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::not_a_partial_order: return "NotAPartialOrder";
    case Errc::not_a_lattice: return "NotALattice";
    case Errc::not_bounded: return "NotBounded";
    case Errc::arity_mismatch: return "ArityMismatch";
    case Errc::bad_size: return "BadSize";
    case Errc::index_out_of_range: return "IndexOutOfRange";
    case Errc::not_separated: return "NotSeparated";
    case Errc::sort_mismatch: return "SortMismatch";
    case Errc::not_galois: return "NotGalois";
    case Errc::not_residuated: return "NotResiduated";
    case Errc::sections_not_stable: return "SectionsNotStable";
    case Errc::guard_exceeded: return "GuardExceeded";
    case Errc::lemma_precondition_failed: return "LemmaPreconditionFailed";
    case Errc::not_closed_element: return "NotClosedElement";
    case Errc::parse_error: return "ParseError";
    case Errc::validation_error: return "ValidationError";
    case Errc::generation_failed: return "GenerationFailed";
  }
  return "Unknown";
}

std::vector<Sort> parse_sorts(std::string_view text) {
  static constexpr std::string_view kPartial = "\xE2\x88\x82";  // ∂
  std::vector<Sort> out;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (c == ' ' || c == ',' || c == '\t') {
      ++i;
    } else if (c == '1') {
      out.push_back(Sort::one);
      ++i;
    } else if (c == 'd') {
      out.push_back(Sort::dual);
      ++i;
    } else if (text.substr(i, kPartial.size()) == kPartial) {
      out.push_back(Sort::dual);
      i += kPartial.size();
    } else {
      throw Error(Errc::sort_mismatch, "bad sort glyph in '" + std::string(text) + "'");
    }
  }
  return out;
}

std::string sorts_to_string(const std::vector<Sort>& sorts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < sorts.size(); ++i) {
    if (i > 0) out += sep;
    out += glyph(sorts[i]);
  }
  return out;
}

std::size_t tuple_count(std::span<const std::size_t> radices) {
  std::size_t n = 1;
  for (std::size_t r : radices) n *= r;
  return n;
}

std::size_t tuple_index(std::span<const std::size_t> tuple, std::span<const std::size_t> radices) {
  std::size_t index = 0;
  for (std::size_t i = 0; i < radices.size(); ++i) index = index * radices[i] + tuple[i];
  return index;
}

std::vector<std::size_t> tuple_at(std::size_t index, std::span<const std::size_t> radices) {
  std::vector<std::size_t> tuple(radices.size());
  for (std::size_t i = radices.size(); i > 0; --i) {
    tuple[i - 1] = index % radices[i - 1];
    index /= radices[i - 1];
  }
  return tuple;
}

namespace {

std::size_t parse_count(std::string_view text) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
    throw Error(Errc::parse_error, "bad guard value '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

Guards parse_guards(std::string_view text, Guards base) {
  if (text.find('=') == std::string_view::npos) {
    base.family = parse_count(text);
    return base;
  }
  while (!text.empty()) {
    std::size_t comma = text.find(',');
    std::string_view item = text.substr(0, comma);
    text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
    std::size_t eq = item.find('=');
    if (eq == std::string_view::npos) throw Error(Errc::parse_error, "guard item without '='");
    std::string_view key = item.substr(0, eq);
    std::size_t value = parse_count(item.substr(eq + 1));
    if (key == "family") {
      base.family = value;
    } else if (key == "lattice") {
      base.lattice = value;
    } else if (key == "arity") {
      base.arity = value;
    } else {
      throw Error(Errc::parse_error, "unknown guard '" + std::string(key) + "'");
    }
  }
  return base;
}

const Guards& default_guards() {
  static const Guards guards = [] {
    const char* env = std::getenv("POLARITYKIT_GUARD");
    return env == nullptr ? Guards{} : parse_guards(env);
  }();
  return guards;
}

}  // namespace polaritykit
