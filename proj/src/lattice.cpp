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

#include "scop/lattice.hpp"

#include <algorithm>

#include "scop/errors.hpp"

namespace scop {

namespace detail {

std::size_t BitRow::count() const {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(__builtin_popcountll(w));
  return n;
}

}  // namespace detail

namespace {

std::string pair_witness(const std::string& a, const std::string& b) {
  return "(" + a + ", " + b + ")";
}

}  // namespace

PropertyLattice PropertyLattice::from_definition(const LatticeDefinition& def) {
  if (def.elements.empty()) {
    throw LatticeDefinitionError("lattice has no elements");
  }
  PropertyLattice l;
  l.labels_ = def.elements;
  for (std::uint32_t i = 0; i < l.labels_.size(); ++i) {
    if (!l.index_.emplace(l.labels_[i], i).second) {
      throw LatticeDefinitionError("duplicate lattice element '" + l.labels_[i] +
                                   "'");
    }
  }
  auto resolve = [&](const std::string& label) -> std::uint32_t {
    auto it = l.index_.find(label);
    if (it == l.index_.end()) {
      throw LatticeDefinitionError("unknown lattice element '" + label + "'");
    }
    return it->second;
  };

  const std::size_t n = l.labels_.size();
  l.up_.assign(n, detail::BitRow(n));
  for (std::size_t i = 0; i < n; ++i) l.up_[i].set(i);
  for (const auto& [a, b] : def.order) l.up_[resolve(a)].set(resolve(b));
  // Warshall closure over bit rows.
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (l.up_[i].test(k)) l.up_[i].or_with(l.up_[k]);
    }
  }
  l.down_.assign(n, detail::BitRow(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (l.up_[i].test(j)) l.down_[j].set(i);
    }
  }

  l.complement_.assign(n, Id<PropertyTag>::kInvalid);
  for (const auto& [a, b] : def.complements) {
    std::uint32_t ia = resolve(a);
    if (l.complement_[ia] != Id<PropertyTag>::kInvalid) {
      throw LatticeDefinitionError("duplicate complement assignment for '" + a +
                                   "'");
    }
    l.complement_[ia] = resolve(b);
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (l.complement_[i] == Id<PropertyTag>::kInvalid) {
      throw LatticeDefinitionError("missing complement for '" + l.labels_[i] +
                                   "'");
    }
  }

  if (def.bottom.empty() || def.top.empty()) {
    throw LatticeDefinitionError("bottom/top element not designated");
  }
  l.bottom_ = PropertyId(resolve(def.bottom));
  l.top_ = PropertyId(resolve(def.top));
  return l;
}

PropertyLattice PropertyLattice::powerset(std::span<const std::string> atoms) {
  if (atoms.size() > kMaxPowersetAtoms) {
    throw TooManyAtomsError("powerset lattice limited to " +
                            std::to_string(kMaxPowersetAtoms) + " atoms, got " +
                            std::to_string(atoms.size()));
  }
  {
    std::vector<std::string> sorted(atoms.begin(), atoms.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw LatticeDefinitionError("powerset atom labels must be distinct");
    }
  }

  PropertyLattice l;
  const std::uint32_t count = std::uint32_t{1} << atoms.size();
  l.labels_.reserve(count);
  for (std::uint32_t m = 0; m < count; ++m) {
    std::string label = "{";
    bool first = true;
    for (std::size_t bit = 0; bit < atoms.size(); ++bit) {
      if (m & (std::uint32_t{1} << bit)) {
        if (!first) label += ",";
        label += atoms[bit];
        first = false;
      }
    }
    label += "}";
    l.index_.emplace(label, m);
    l.labels_.push_back(std::move(label));
  }
  l.powerset_atoms_ = static_cast<int>(atoms.size());
  l.complement_.resize(count);
  for (std::uint32_t m = 0; m < count; ++m) l.complement_[m] = (count - 1) ^ m;
  l.bottom_ = PropertyId(0);
  l.top_ = PropertyId(count - 1);
  return l;
}

PropertyLattice powerset_lattice(std::span<const std::string> atoms) {
  return PropertyLattice::powerset(atoms);
}

std::vector<PropertyId> PropertyLattice::all_elements() const {
  std::vector<PropertyId> out;
  out.reserve(size());
  for (std::uint32_t i = 0; i < size(); ++i) out.push_back(PropertyId(i));
  return out;
}

PropertyId PropertyLattice::element(std::string_view label) const {
  auto found = find(label);
  if (!found) {
    throw UnknownElementError("unknown lattice element '" + std::string(label) +
                              "'");
  }
  return *found;
}

std::optional<PropertyId> PropertyLattice::find(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return PropertyId(it->second);
}

const std::string& PropertyLattice::label(PropertyId a) const {
  check_id(a);
  return labels_[a.index];
}

void PropertyLattice::check_id(PropertyId a) const {
  if (!a.valid() || a.index >= size()) {
    throw UnknownElementError("lattice element id out of range");
  }
}

bool PropertyLattice::leq(PropertyId a, PropertyId b) const {
  check_id(a);
  check_id(b);
  if (powerset_backed()) return (a.index & ~b.index) == 0;
  return up_[a.index].test(b.index);
}

PropertyId PropertyLattice::complement_of(PropertyId a) const {
  check_id(a);
  return PropertyId(complement_[a.index]);
}

detail::BitRow PropertyLattice::row_up(std::uint32_t i) const {
  if (!powerset_backed()) return up_[i];
  detail::BitRow row(size());
  for (std::uint32_t j = 0; j < size(); ++j) {
    if ((i & ~j) == 0) row.set(j);
  }
  return row;
}

detail::BitRow PropertyLattice::row_down(std::uint32_t i) const {
  if (!powerset_backed()) return down_[i];
  detail::BitRow row(size());
  // Subsets of i, enumerated directly.
  std::uint32_t sub = i;
  while (true) {
    row.set(sub);
    if (sub == 0) break;
    sub = (sub - 1) & i;
  }
  return row;
}

detail::BitRow PropertyLattice::bound_set(std::span<const PropertyId> xs,
                                          bool lower) const {
  detail::BitRow acc(size());
  acc.fill();
  for (PropertyId x : xs) {
    acc.and_with(lower ? row_down(x.index) : row_up(x.index));
  }
  return acc;
}

std::optional<std::uint32_t> PropertyLattice::extremum_of(
    const detail::BitRow& set, bool greatest) const {
  std::optional<std::uint32_t> found;
  bool unique = true;
  set.for_each([&](std::size_t c) {
    if (!unique) return;
    bool ok = set.subset_of(greatest ? row_down(static_cast<std::uint32_t>(c))
                                     : row_up(static_cast<std::uint32_t>(c)));
    if (ok) {
      if (found) {
        unique = false;
      } else {
        found = static_cast<std::uint32_t>(c);
      }
    }
  });
  if (!unique) return std::nullopt;
  return found;
}

PropertyId PropertyLattice::meet(std::span<const PropertyId> xs) const {
  for (PropertyId x : xs) check_id(x);
  if (powerset_backed()) {
    std::uint32_t acc = top_.index;
    for (PropertyId x : xs) acc &= x.index;
    return PropertyId(acc);
  }
  auto glb = extremum_of(bound_set(xs, /*lower=*/true), /*greatest=*/true);
  if (!glb) {
    throw NoBoundError("no infimum: lattice is not complete for the given set");
  }
  return PropertyId(*glb);
}

PropertyId PropertyLattice::join(std::span<const PropertyId> xs) const {
  for (PropertyId x : xs) check_id(x);
  if (powerset_backed()) {
    std::uint32_t acc = 0;
    for (PropertyId x : xs) acc |= x.index;
    return PropertyId(acc);
  }
  auto lub = extremum_of(bound_set(xs, /*lower=*/false), /*greatest=*/false);
  if (!lub) {
    throw NoBoundError("no supremum: lattice is not complete for the given set");
  }
  return PropertyId(*lub);
}

PropertyId PropertyLattice::meet(PropertyId a, PropertyId b) const {
  PropertyId xs[2] = {a, b};
  return meet(std::span<const PropertyId>(xs, 2));
}

PropertyId PropertyLattice::join(PropertyId a, PropertyId b) const {
  PropertyId xs[2] = {a, b};
  return join(std::span<const PropertyId>(xs, 2));
}

ValidationReport PropertyLattice::validate() const {
  const std::size_t n = size();
  if (n > kValidateLimit) {
    throw Error("lattice too large to validate exhaustively (" +
                std::to_string(n) + " elements, limit " +
                std::to_string(kValidateLimit) + ")");
  }
  ValidationReport report;

  std::vector<detail::BitRow> up(n), down(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    up[i] = row_up(i);
    down[i] = row_down(i);
  }

  // Partial order. Reflexivity and transitivity hold by construction (the
  // stored relation is a reflexive-transitive closure); antisymmetry can
  // genuinely fail when the generators contain a cycle.
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = i + 1; j < n; ++j) {
      if (up[i].test(j) && up[j].test(i)) {
        report.add("order.antisymmetry",
                   pair_witness(labels_[i], labels_[j]) +
                       " are mutually <= but distinct");
      }
    }
  }

  for (std::uint32_t a = 0; a < n; ++a) {
    if (!up[bottom_.index].test(a)) {
      report.add("order.bottom", "bottom '" + labels_[bottom_.index] +
                                     "' is not <= '" + labels_[a] + "'");
    }
    if (!up[a].test(top_.index)) {
      report.add("order.top", "'" + labels_[a] + "' is not <= top '" +
                                  labels_[top_.index] + "'");
    }
  }

  // Completeness: every pair must have a unique infimum and supremum. For a
  // finite poset with bottom and top this implies completeness for every
  // subset.
  auto pair_extremum = [&](std::uint32_t i, std::uint32_t j,
                           bool lower) -> std::optional<std::uint32_t> {
    detail::BitRow bounds = lower ? down[i] : up[i];
    bounds.and_with(lower ? down[j] : up[j]);
    std::optional<std::uint32_t> found;
    bool unique = true;
    bounds.for_each([&](std::size_t c) {
      if (!unique) return;
      bool ok = bounds.subset_of(lower ? down[c] : up[c]);
      if (ok) {
        if (found) {
          unique = false;
        } else {
          found = static_cast<std::uint32_t>(c);
        }
      }
    });
    if (!unique) return std::nullopt;
    return found;
  };

  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = i; j < n; ++j) {
      if (!pair_extremum(i, j, /*lower=*/true)) {
        report.add("lattice.no-infimum",
                   pair_witness(labels_[i], labels_[j]) +
                       " has no greatest lower bound");
      }
      if (!pair_extremum(i, j, /*lower=*/false)) {
        report.add("lattice.no-supremum",
                   pair_witness(labels_[i], labels_[j]) +
                       " has no least upper bound");
      }
    }
  }

  // Orthocomplementation laws.
  for (std::uint32_t a = 0; a < n; ++a) {
    std::uint32_t ca = complement_[a];
    if (complement_[ca] != a) {
      report.add("ortho.involution",
                 "(" + labels_[a] + ")⊥⊥ = " + labels_[complement_[ca]] +
                     " != " + labels_[a]);
    }
  }
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = 0; b < n; ++b) {
      if (a != b && up[a].test(b)) {
        if (!up[complement_[b]].test(complement_[a])) {
          report.add("ortho.order-reversal",
                     labels_[a] + " < " + labels_[b] + " but " +
                         labels_[complement_[b]] + " is not <= " +
                         labels_[complement_[a]]);
        }
      }
    }
  }
  for (std::uint32_t a = 0; a < n; ++a) {
    std::uint32_t ca = complement_[a];
    if (auto glb = pair_extremum(a, ca, /*lower=*/true)) {
      if (*glb != bottom_.index) {
        report.add("ortho.meet-zero", labels_[a] + " ∧ " + labels_[ca] +
                                          " = " + labels_[*glb] + " != " +
                                          labels_[bottom_.index]);
      }
    }
    if (auto lub = pair_extremum(a, ca, /*lower=*/false)) {
      if (*lub != top_.index) {
        report.add("ortho.join-one", labels_[a] + " ∨ " + labels_[ca] + " = " +
                                         labels_[*lub] + " != " +
                                         labels_[top_.index]);
      }
    }
  }

  // Weak modularity (orthomodular law) is informational only; the cognitive
  // lattice is not required to satisfy it.
  if (report.ok()) {
    bool holds = true;
    std::string witness;
    for (std::uint32_t a = 0; a < n && holds; ++a) {
      for (std::uint32_t b = 0; b < n && holds; ++b) {
        if (!up[a].test(b)) continue;
        auto inner = pair_extremum(complement_[a], b, /*lower=*/true);
        if (!inner) continue;
        detail::BitRow bounds = up[a];
        bounds.and_with(up[*inner]);
        std::optional<std::uint32_t> found;
        bounds.for_each([&](std::size_t c) {
          if (!found && bounds.subset_of(up[c]))
            found = static_cast<std::uint32_t>(c);
        });
        if (!found || *found != b) {
          holds = false;
          witness = pair_witness(labels_[a], labels_[b]);
        }
      }
    }
    report.note(holds ? "orthomodularity: holds"
                      : "orthomodularity: fails at " + witness);
  } else {
    report.note("orthomodularity: not evaluated (axioms violated)");
  }

  return report;
}

}  // namespace scop
