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

#ifndef POLARITYKIT_REPORT_HPP_
#define POLARITYKIT_REPORT_HPP_

#include <optional>
#include <string>
#include <vector>

namespace polaritykit {

/// A node of a verification result tree. A node passes iff its own check
/// passed and all children pass; add() keeps that invariant.
struct Report {
  std::string name;
  bool passed = true;
  std::string detail;
  std::vector<std::string> witness;
  std::vector<Report> children;
  std::optional<double> millis;

  Report() = default;
  explicit Report(std::string n) : name(std::move(n)) {}

  Report& add(Report child) {
    passed = passed && child.passed;
    children.push_back(std::move(child));
    return children.back();
  }

  /// Marks this node failed with a witness line; keeps only the first witness
  /// unless `all` is set.
  void fail(std::string line, bool all = false) {
    passed = false;
    if (all || witness.empty()) witness.push_back(std::move(line));
  }

  static Report leaf(std::string n, bool ok, std::string d = {}) {
    Report r(std::move(n));
    r.passed = ok;
    r.detail = std::move(d);
    return r;
  }
};

}  // namespace polaritykit

#endif  // POLARITYKIT_REPORT_HPP_
