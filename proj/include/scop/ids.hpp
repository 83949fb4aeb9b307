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

#ifndef SCOP_IDS_HPP
#define SCOP_IDS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "scop/errors.hpp"

namespace scop {

/// Strongly typed index. Ids are scoped to the registry (lattice, system,
/// realization) that issued them; mixing ids across objects is a caller bug.
template <class Tag>
struct Id {
  static constexpr std::uint32_t kInvalid = 0xffffffffu;

  std::uint32_t index = kInvalid;

  constexpr Id() = default;
  constexpr explicit Id(std::uint32_t i) : index(i) {}

  constexpr bool valid() const { return index != kInvalid; }

  friend constexpr bool operator==(Id a, Id b) { return a.index == b.index; }
  friend constexpr bool operator!=(Id a, Id b) { return a.index != b.index; }
  friend constexpr bool operator<(Id a, Id b) { return a.index < b.index; }
};

struct StateTag;
struct ContextTag;
struct PropertyTag;

using StateId = Id<StateTag>;
using ContextId = Id<ContextTag>;
using PropertyId = Id<PropertyTag>;

/// Insertion-ordered label table. Labels double as identifiers and display
/// strings; uniqueness is enforced.
class LabelRegistry {
 public:
  std::uint32_t add(std::string label) {
    auto [it, inserted] =
        index_.emplace(label, static_cast<std::uint32_t>(labels_.size()));
    if (!inserted) {
      throw DuplicateEntryError("duplicate label '" + label + "'");
    }
    labels_.push_back(std::move(label));
    return it->second;
  }

  std::optional<std::uint32_t> find(std::string_view label) const {
    auto it = index_.find(std::string(label));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  const std::string& label(std::uint32_t i) const { return labels_.at(i); }

  std::size_t size() const { return labels_.size(); }

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, std::uint32_t> index_;
};

}  // namespace scop

#endif  // SCOP_IDS_HPP
