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

#ifndef SCOP_REPORT_HPP
#define SCOP_REPORT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "scop/validation.hpp"

namespace scop {

/// Fixed 9-decimal rendering; "-0.000000000" is normalized to the positive
/// form so reports stay byte-stable around zero.
std::string format_fixed9(double value);

std::uint64_t fnv1a64(std::string_view bytes);
std::string fnv1a64_hex(std::string_view bytes);

/// Deterministic command report: given identical inputs and seed, both
/// renderings are byte-identical across runs. No timestamps, no pointers.
class RunReport {
 public:
  explicit RunReport(std::string command) : command_(std::move(command)) {}

  void add_input(std::string path, std::string_view bytes) {
    inputs_.push_back({std::move(path), fnv1a64_hex(bytes)});
  }
  void set_seed(std::uint64_t seed) { seed_ = seed; }

  void kv(std::string key, std::string value) {
    items_.push_back({std::move(key), std::move(value), true});
  }
  void kv(std::string key, double value) {
    kv(std::move(key), format_fixed9(value));
  }
  void line(std::string text) {
    items_.push_back({std::string(), std::move(text), false});
  }
  void set_validation(ValidationReport report) {
    validation_ = std::move(report);
  }

  std::string to_text() const;
  /// JSON rendering (ordered keys, 2-space indent, trailing newline).
  std::string to_structured() const;

 private:
  struct Item {
    std::string key;
    std::string value;
    bool is_kv;
  };

  std::string command_;
  std::vector<std::pair<std::string, std::string>> inputs_;
  std::optional<std::uint64_t> seed_;
  std::vector<Item> items_;
  std::optional<ValidationReport> validation_;
};

}  // namespace scop

#endif  // SCOP_REPORT_HPP
