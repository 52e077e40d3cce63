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

#ifndef POLARITYKIT_ERROR_HPP_
#define POLARITYKIT_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace polaritykit {

enum class Errc {
  not_a_partial_order,
  not_a_lattice,
  not_bounded,
  arity_mismatch,
  bad_size,
  index_out_of_range,
  not_separated,
  sort_mismatch,
  not_galois,
  not_residuated,
  sections_not_stable,
  guard_exceeded,
  lemma_precondition_failed,
  not_closed_element,
  parse_error,
  validation_error,
  generation_failed,
};

std::string_view errc_name(Errc code);

/// All library failures are reported by throwing Error (or a subclass).
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

/// Text-format failure with a 1-based position.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : Error(Errc::parse_error,
              "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace polaritykit

#endif  // POLARITYKIT_ERROR_HPP_
