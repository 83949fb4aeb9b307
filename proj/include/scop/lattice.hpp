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

#ifndef SCOP_LATTICE_HPP
#define SCOP_LATTICE_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "scop/ids.hpp"
#include "scop/validation.hpp"

namespace scop {

namespace detail {

/// Minimal fixed-size bit vector used for order relations.
class BitRow {
 public:
  BitRow() = default;
  explicit BitRow(std::size_t n) : size_(n), words_((n + 63) / 64, 0) {}

  void set(std::size_t i) { words_[i >> 6] |= (std::uint64_t{1} << (i & 63)); }
  bool test(std::size_t i) const {
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }
  std::size_t size() const { return size_; }

  void or_with(const BitRow& other) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
  }
  void and_with(const BitRow& other) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
  }
  bool subset_of(const BitRow& other) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      if (words_[w] & ~other.words_[w]) return false;
    }
    return true;
  }
  void fill() {
    for (auto& w : words_) w = ~std::uint64_t{0};
    trim();
  }
  std::size_t count() const;
  /// Calls f(index) for every set bit.
  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        unsigned tz = static_cast<unsigned>(__builtin_ctzll(bits));
        f(w * 64 + tz);
        bits &= bits - 1;
      }
    }
  }

 private:
  void trim() {
    if (size_ & 63) {
      words_.back() &= (std::uint64_t{1} << (size_ & 63)) - 1;
    }
  }

  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace detail

/// Raw hand-authorable description of a lattice: element labels, order
/// generators (a < b), an explicit complement map, and the designated
/// bottom/top elements. Structural problems (unknown labels, duplicate or
/// missing complement assignments) make construction impossible and throw;
/// axiom violations do not — they surface through validate().
struct LatticeDefinition {
  std::vector<std::string> elements;
  std::vector<std::pair<std::string, std::string>> order;
  std::vector<std::pair<std::string, std::string>> complements;
  std::string bottom;
  std::string top;
};

/// Finite orthocomplemented property lattice. The order relation is stored
/// as its reflexive-transitive closure, computed once at construction, so
/// leq() is O(1). Meets and joins are computed from the closed relation by
/// greatest-lower-bound / least-upper-bound scans rather than stored tables.
///
/// Powerset lattices use an implicit subset-order backend (element index ==
/// atom bitmask), which keeps powerset_lattice cheap up to the 16-atom cap.
///
/// Immutable after construction; all queries are const and thread-safe.
class PropertyLattice {
 public:
  /// Exhaustive validation is O(n^2) pairs with O(n) bound scans; lattices
  /// larger than this cannot be validated (and cannot be loaded from files,
  /// since file loading validates eagerly).
  static constexpr std::size_t kValidateLimit = 512;
  static constexpr std::size_t kMaxPowersetAtoms = 16;

  static PropertyLattice from_definition(const LatticeDefinition& def);
  static PropertyLattice powerset(std::span<const std::string> atoms);
  static PropertyLattice powerset(std::initializer_list<std::string> atoms) {
    std::vector<std::string> v(atoms);
    return powerset(std::span<const std::string>(v));
  }

  std::size_t size() const { return labels_.size(); }
  std::vector<PropertyId> all_elements() const;
  PropertyId element(std::string_view label) const;  // throws UnknownElementError
  std::optional<PropertyId> find(std::string_view label) const;
  const std::string& label(PropertyId a) const;

  PropertyId bottom() const { return bottom_; }
  PropertyId top() const { return top_; }

  bool leq(PropertyId a, PropertyId b) const;
  PropertyId complement_of(PropertyId a) const;
  PropertyId meet(std::span<const PropertyId> xs) const;  // meet({}) == top
  PropertyId join(std::span<const PropertyId> xs) const;  // join({}) == bottom
  PropertyId meet(PropertyId a, PropertyId b) const;
  PropertyId join(PropertyId a, PropertyId b) const;

  /// Checks every axiom: antisymmetry of the closed order, bottom/top
  /// designations, pairwise existence of infima/suprema, and the four
  /// orthocomplementation laws. Reports carry witnesses. Also notes (but
  /// never fails on) whether the orthomodular law holds.
  ValidationReport validate() const;

  bool powerset_backed() const { return powerset_atoms_ >= 0; }

 private:
  PropertyLattice() = default;

  void check_id(PropertyId a) const;
  // Lower/upper bound sets of `xs` as bit rows over element indices.
  detail::BitRow bound_set(std::span<const PropertyId> xs, bool lower) const;
  // Unique greatest element of `set` (or least, for upper-bound sets).
  std::optional<std::uint32_t> extremum_of(const detail::BitRow& set,
                                           bool greatest) const;
  detail::BitRow row_up(std::uint32_t i) const;
  detail::BitRow row_down(std::uint32_t i) const;

  std::vector<std::string> labels_;
  std::unordered_map<std::string, std::uint32_t> index_;
  // Explicit backend: up_[a] has bit b set iff a <= b; down_ is the transpose.
  std::vector<detail::BitRow> up_;
  std::vector<detail::BitRow> down_;
  // Powerset backend: element index is the atom bitmask; order is subset.
  int powerset_atoms_ = -1;
  std::vector<std::uint32_t> complement_;
  PropertyId bottom_;
  PropertyId top_;
};

/// Boolean test-fixture lattice over at most 16 atoms; set complement as
/// orthocomplement. See PropertyLattice::powerset.
PropertyLattice powerset_lattice(std::span<const std::string> atoms);

}  // namespace scop

#endif  // SCOP_LATTICE_HPP
