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

#ifndef POLARITYKIT_IO_HPP_
#define POLARITYKIT_IO_HPP_

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "polaritykit/normal_operator.hpp"
#include "polaritykit/polarity.hpp"
#include "polaritykit/report.hpp"
#include "polaritykit/sorted_relation.hpp"

/// Text formats, seeded generators and report rendering.
///
/// Both document kinds are UTF-8, line oriented, with `#` comments and
/// whitespace-separated tokens. A point or element is referred to by its name
/// when names are declared, otherwise (or additionally) by its index.
///
/// Lattice document:
///
///     lattice 3
///     elements 0 1/2 1          # optional names
///     leq 0 1/2                 # order pairs a <= b; covers are enough
///     leq 1/2 1
///     op o 1,1;1                # name and distribution type
///     row 0 0 0                 # table rows, see below
///
/// An operator of arity n has |L|^(n-1) rows of |L| entries. The table is
/// row-major over lexicographically ordered argument tuples, so the last
/// argument varies along a row.
///
/// Frame document:
///
///     polarity 2 2
///     xnames x0 x1              # optional
///     ynames y0 y1              # optional
///     inc x0 y0
///     relation R 1;1 1          # name and sort type (output first)
///     t x0 x0 x0                # tuple w u_1 ... u_n
namespace polaritykit::io {

enum class DocKind { lattice, frame };

/// Kind from the first keyword. Throws ParseError.
DocKind detect_kind(std::string_view text);

/// Throws ParseError for malformed text and Error(validation_error) when the
/// order is not a lattice or an operator is not normal for its type.
LatticeExpansion parse_lattice_doc(std::string_view text);
/// Canonical formatting: covers only, `d` for the dual sort, names if present.
std::string serialize_lattice_doc(const LatticeExpansion& e);

struct FrameDoc {
  std::shared_ptr<const Polarity> polarity;
  std::vector<std::string> xnames;  // empty means indices
  std::vector<std::string> ynames;
  std::vector<SortedRelation> relations;

  std::string point_name(Sort s, Point p) const;
};

/// Throws ParseError, and Error(sort_mismatch) or Error(index_out_of_range)
/// with the line for tuples that do not fit the relation's sort type.
FrameDoc parse_frame_doc(std::string_view text);
std::string serialize_frame_doc(const FrameDoc& doc);

/// Throws Error(bad_size) above 64 points, Error(validation_error) for a
/// density outside [0, 1].
Polarity random_polarity(std::uint64_t seed, std::size_t nx, std::size_t ny, double density);

/// A random n-element lattice: a random family of subsets of an n-element
/// set, together with the full set, closed under intersection and ordered by
/// inclusion. Attempts that overshoot n are retried; Error(generation_failed)
/// after 1000 attempts.
Lattice random_lattice(std::uint64_t seed, std::size_t n);

/// Each well-sorted tuple independently with probability `density`.
SortedRelation random_relation(std::uint64_t seed, std::shared_ptr<const Polarity> p, const SortType& type,
                               double density, std::string name = "R");

/// "[PASS] name: detail" lines, indented per level, witnesses below failures.
std::string render_text(const Report& r);
/// {"schema": 1, "report": {...}}; timings are included only when asked, so
/// the default output is byte-identical across runs.
std::string render_json(const Report& r, bool timings = false);

}  // namespace polaritykit::io

#endif  // POLARITYKIT_IO_HPP_
