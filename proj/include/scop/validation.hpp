// Copyright 2026 The scopwb Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SCOP_VALIDATION_HPP
#define SCOP_VALIDATION_HPP

#include <string>
#include <vector>

namespace scop {

/// One violated rule, with a witness in `detail`.
struct Violation {
  std::string rule;    // stable machine-checkable identifier, e.g. "ortho.involution"
  std::string detail;  // human-readable witness, e.g. "(a, b)"
};

/// Report produced by the validate_* operations. Violations are findings,
/// not failures: producing a report never throws. `notes` carries non-fatal
/// observations (e.g. whether the orthomodular law happens to hold).
struct ValidationReport {
  std::vector<Violation> violations;
  std::vector<std::string> notes;

  bool ok() const { return violations.empty(); }

  void add(std::string rule, std::string detail) {
    violations.push_back({std::move(rule), std::move(detail)});
  }

  void note(std::string text) { notes.push_back(std::move(text)); }

  void merge(const ValidationReport& other) {
    violations.insert(violations.end(), other.violations.begin(),
                      other.violations.end());
    notes.insert(notes.end(), other.notes.begin(), other.notes.end());
  }

  bool has_rule(const std::string& rule) const {
    for (const auto& v : violations) {
      if (v.rule == rule) return true;
    }
    return false;
  }

  std::string to_string() const {
    if (ok() && notes.empty()) return "ok\n";
    std::string out;
    for (const auto& v : violations) {
      out += "violation: " + v.rule + ": " + v.detail + "\n";
    }
    for (const auto& n : notes) {
      out += "note: " + n + "\n";
    }
    if (ok()) out += "ok\n";
    return out;
  }
};

}  // namespace scop

#endif  // SCOP_VALIDATION_HPP
