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

#include "scop/hilbert.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "scop/errors.hpp"

namespace scop {

namespace {

void check_same_dim(const HVector& x, const HVector& y) {
  if (x.dim() != y.dim()) {
    throw DimensionMismatchError("vectors have dimensions " +
                                 std::to_string(x.dim()) + " and " +
                                 std::to_string(y.dim()));
  }
}

void check_unit(const HVector& x, const char* who) {
  if (!x.is_unit()) {
    throw NonUnitStateError(std::string(who) + " requires a unit vector (norm " +
                            std::to_string(h_norm(x)) + ")");
  }
}

double clamp01(double v) { return std::min(1.0, std::max(0.0, v)); }

}  // namespace

HVector::HVector(std::vector<Complex> components) : c_(std::move(components)) {
  if (c_.empty() || c_.size() > kMaxDimension) {
    throw DimensionMismatchError("vector dimension must be in [1, " +
                                 std::to_string(kMaxDimension) + "]");
  }
}

HVector HVector::zero(std::size_t dim) {
  return HVector(std::vector<Complex>(dim, Complex{0.0, 0.0}));
}

HVector HVector::basis(std::size_t dim, std::size_t i) {
  HVector v = zero(dim);
  v[i] = Complex{1.0, 0.0};
  return v;
}

HVector& HVector::operator+=(const HVector& o) {
  check_same_dim(*this, o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

HVector& HVector::operator-=(const HVector& o) {
  check_same_dim(*this, o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

HVector& HVector::operator*=(Complex s) {
  for (auto& c : c_) c *= s;
  return *this;
}

bool HVector::is_unit(double eps) const {
  return std::abs(h_norm(*this) - 1.0) <= eps;
}

Complex inner(const HVector& x, const HVector& y) {
  check_same_dim(x, y);
  Complex sum{0.0, 0.0};
  for (std::size_t i = 0; i < x.dim(); ++i) sum += std::conj(x[i]) * y[i];
  return sum;
}

double h_norm(const HVector& x) {
  double sum = 0.0;
  for (std::size_t i = 0; i < x.dim(); ++i) sum += std::norm(x[i]);
  return std::sqrt(sum);
}

double h_distance(const HVector& x, const HVector& y) {
  check_same_dim(x, y);
  double sum = 0.0;
  for (std::size_t i = 0; i < x.dim(); ++i) sum += std::norm(x[i] - y[i]);
  return std::sqrt(sum);
}

double h_angle(const HVector& x, const HVector& y) {
  check_unit(x, "h_angle");
  check_unit(y, "h_angle");
  return std::acos(clamp01(std::abs(inner(x, y))));
}

Subspace Subspace::span(std::span<const HVector> generators) {
  if (generators.empty()) {
    throw RankDeficientError("subspace needs at least one generator");
  }
  const std::size_t ambient = generators.front().dim();
  std::vector<HVector> basis;
  for (const HVector& g : generators) {
    check_same_dim(g, generators.front());
    HVector v = g;
    // Two passes of modified Gram-Schmidt for numerical stability.
    for (int pass = 0; pass < 2; ++pass) {
      for (const HVector& b : basis) {
        v -= inner(b, v) * b;
      }
    }
    double norm = h_norm(v);
    if (norm < kEpsQ) {
      throw RankDeficientError(
          "generators are rank-deficient: vector " +
          std::to_string(&g - generators.data()) +
          " lies in the span of the previous ones");
    }
    v *= Complex{1.0 / norm, 0.0};
    basis.push_back(std::move(v));
  }
  if (basis.size() > ambient) {
    throw RankDeficientError("basis larger than ambient dimension");
  }
  return Subspace(ambient, std::move(basis));
}

HVector Subspace::project(const HVector& x) const {
  if (x.dim() != ambient_) {
    throw DimensionMismatchError("vector does not live in the ambient space");
  }
  HVector result = HVector::zero(ambient_);
  for (const HVector& b : basis_) {
    result += inner(b, x) * b;
  }
  return result;
}

Subspace Subspace::orthogonal_complement() const {
  std::vector<HVector> basis;
  for (std::size_t i = 0; i < ambient_ && basis.size() < ambient_ - dim();
       ++i) {
    HVector v = HVector::basis(ambient_, i);
    for (int pass = 0; pass < 2; ++pass) {
      for (const HVector& b : basis_) v -= inner(b, v) * b;
      for (const HVector& b : basis) v -= inner(b, v) * b;
    }
    double norm = h_norm(v);
    if (norm < 1e-7) continue;  // e_i (numerically) inside M ⊕ span(basis)
    v *= Complex{1.0 / norm, 0.0};
    basis.push_back(std::move(v));
  }
  if (basis.size() != ambient_ - dim()) {
    throw RankDeficientError("failed to complete an orthonormal complement");
  }
  return Subspace(ambient_, std::move(basis));
}

HVector project(const Subspace& m, const HVector& x) { return m.project(x); }

double q_weight(const HVector& x, const Subspace& m) {
  check_unit(x, "q_weight");
  double w = inner(x, m.project(x)).real();
  return clamp01(w);
}

SpectralFamily::SpectralFamily(std::vector<Subspace> parts)
    : ambient_(0), parts_(std::move(parts)) {
  if (parts_.empty()) {
    report_.add("family.empty", "spectral family has no parts");
    return;
  }
  ambient_ = parts_.front().ambient_dim();
  std::size_t total = 0;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i].ambient_dim() != ambient_) {
      report_.add("family.ambient", "part " + std::to_string(i) +
                                        " lives in a different space");
      return;
    }
    total += parts_[i].dim();
  }
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    for (std::size_t j = i + 1; j < parts_.size(); ++j) {
      for (const HVector& bi : parts_[i].basis()) {
        for (const HVector& bj : parts_[j].basis()) {
          Complex ip = inner(bi, bj);
          if (std::abs(ip) > kEpsQ) {
            std::ostringstream os;
            os << "parts " << i << " and " << j
               << " are not orthogonal: |<b_i, b_j>| = " << std::abs(ip);
            report_.add("family.orthogonality", os.str());
          }
        }
      }
    }
  }
  if (total != ambient_) {
    report_.add("family.completeness",
                "part dimensions sum to " + std::to_string(total) + " of " +
                    std::to_string(ambient_));
  }
}

std::vector<CollapseOutcome> q_collapse(const SpectralFamily& family,
                                        const HVector& x) {
  if (!family.validate().ok()) {
    throw InvalidFamilyError("q_collapse requires a valid spectral family: " +
                             family.validate().violations.front().detail);
  }
  if (x.dim() != family.ambient_dim()) {
    throw DimensionMismatchError("state dimension does not match family");
  }
  check_unit(x, "q_collapse");

  std::vector<CollapseOutcome> outcomes;
  for (std::size_t i = 0; i < family.parts().size(); ++i) {
    HVector y = family.parts()[i].project(x);
    double prob = clamp01(inner(x, y).real());
    if (prob <= 1e-12) continue;  // zero projection: not a possible outcome
    double norm = h_norm(y);
    y *= Complex{1.0 / norm, 0.0};
    outcomes.push_back({i, std::move(y), prob});
  }
  return outcomes;
}

QuantumScop::QuantumScop(std::size_t dim) : dim_(dim) {
  if (dim == 0 || dim > kMaxDimension) {
    throw DimensionMismatchError("dimension must be in [1, " +
                                 std::to_string(kMaxDimension) + "]");
  }
}

StateId QuantumScop::add_state(std::string label, HVector v) {
  if (v.dim() != dim_) {
    throw DimensionMismatchError("state vector has wrong dimension");
  }
  check_unit(v, "add_state");
  std::lock_guard<std::mutex> lock(mu_);
  for (const auto& [name, _] : states_) {
    if (name == label) {
      throw DuplicateEntryError("duplicate state label '" + label + "'");
    }
  }
  states_.emplace_back(std::move(label), std::move(v));
  return StateId(static_cast<std::uint32_t>(states_.size() - 1));
}

ContextId QuantumScop::add_family(std::string label, SpectralFamily family) {
  if (family.ambient_dim() != dim_) {
    throw DimensionMismatchError("family has wrong ambient dimension");
  }
  if (!family.validate().ok()) {
    throw InvalidFamilyError("family '" + label + "' is invalid: " +
                             family.validate().violations.front().detail);
  }
  for (const auto& [name, _] : families_) {
    if (name == label) {
      throw DuplicateEntryError("duplicate family label '" + label + "'");
    }
  }
  std::vector<std::uint32_t> props;
  for (std::size_t i = 0; i < family.parts().size(); ++i) {
    props.push_back(static_cast<std::uint32_t>(properties_.size()));
    properties_.emplace_back(label + "[" + std::to_string(i) + "]",
                             family.parts()[i]);
  }
  family_properties_.push_back(std::move(props));
  families_.emplace_back(std::move(label), std::move(family));
  return ContextId(static_cast<std::uint32_t>(families_.size() - 1));
}

const HVector& QuantumScop::state_vector(StateId p) const {
  std::lock_guard<std::mutex> lock(mu_);
  if (p.index >= states_.size()) throw UnknownIdError("unknown quantum state");
  return states_[p.index].second;
}

const SpectralFamily& QuantumScop::family(ContextId e) const {
  if (e.index >= families_.size()) {
    throw UnknownIdError("unknown quantum context");
  }
  return families_[e.index].second;
}

const Subspace& QuantumScop::property_subspace(PropertyId a) const {
  if (a.index >= properties_.size()) {
    throw UnknownIdError("unknown quantum property");
  }
  return properties_[a.index].second;
}

PropertyId QuantumScop::part_property(ContextId e, std::size_t index) const {
  if (e.index >= family_properties_.size() ||
      index >= family_properties_[e.index].size()) {
    throw UnknownIdError("unknown family part");
  }
  return PropertyId(family_properties_[e.index][index]);
}

StateId QuantumScop::intern_state(const HVector& v,
                                  const std::string& hint) const {
  std::lock_guard<std::mutex> lock(mu_);
  for (std::uint32_t i = 0; i < states_.size(); ++i) {
    const HVector& s = states_[i].second;
    double dev = 0.0;
    for (std::size_t k = 0; k < dim_; ++k) {
      dev = std::max(dev, std::abs(s[k] - v[k]));
    }
    if (dev <= kEpsQ) return StateId(i);
  }
  std::string label = hint;
  for (int n = 2;; ++n) {
    bool taken = false;
    for (const auto& [name, _] : states_) {
      if (name == label) {
        taken = true;
        break;
      }
    }
    if (!taken) break;
    label = hint + "~" + std::to_string(n);
  }
  states_.emplace_back(std::move(label), v);
  return StateId(static_cast<std::uint32_t>(states_.size() - 1));
}

std::vector<TransitionEntry> QuantumScop::transition_distribution(
    ContextId e, StateId p) const {
  const SpectralFamily& fam = family(e);
  HVector x = state_vector(p);
  const std::string p_label = state_label(p);
  const std::string& e_label = families_[e.index].first;

  std::vector<TransitionEntry> entries;
  for (const CollapseOutcome& o : q_collapse(fam, x)) {
    StateId q = intern_state(
        o.state, p_label + "@" + e_label + "#" + std::to_string(o.part_index));
    // The measurement context never changes: f == e always.
    entries.push_back({e, q, o.probability});
  }
  return entries;
}

double QuantumScop::weight(StateId p, ContextId e, PropertyId a) const {
  // In the pure quantum case the weight depends on the context only through
  // the property's own subspace, so e is validated but otherwise unused.
  family(e);
  return q_weight(state_vector(p), property_subspace(a));
}

std::vector<StateId> QuantumScop::states() const {
  std::lock_guard<std::mutex> lock(mu_);
  std::vector<StateId> out;
  out.reserve(states_.size());
  for (std::uint32_t i = 0; i < states_.size(); ++i) out.push_back(StateId(i));
  return out;
}

std::vector<ContextId> QuantumScop::contexts() const {
  std::vector<ContextId> out;
  out.reserve(families_.size());
  for (std::uint32_t i = 0; i < families_.size(); ++i)
    out.push_back(ContextId(i));
  return out;
}

const std::string& QuantumScop::state_label(StateId p) const {
  std::lock_guard<std::mutex> lock(mu_);
  if (p.index >= states_.size()) throw UnknownIdError("unknown quantum state");
  return states_[p.index].first;
}

const std::string& QuantumScop::context_label(ContextId e) const {
  if (e.index >= families_.size()) {
    throw UnknownIdError("unknown quantum context");
  }
  return families_[e.index].first;
}

std::optional<StateId> QuantumScop::find_state(std::string_view label) const {
  std::lock_guard<std::mutex> lock(mu_);
  for (std::uint32_t i = 0; i < states_.size(); ++i) {
    if (states_[i].first == label) return StateId(i);
  }
  return std::nullopt;
}

std::optional<ContextId> QuantumScop::find_context(
    std::string_view label) const {
  for (std::uint32_t i = 0; i < families_.size(); ++i) {
    if (families_[i].first == label) return ContextId(i);
  }
  return std::nullopt;
}

std::optional<PropertyId> QuantumScop::find_property(
    std::string_view label) const {
  for (std::uint32_t i = 0; i < properties_.size(); ++i) {
    if (properties_[i].first == label) return PropertyId(i);
  }
  return std::nullopt;
}

const std::string& QuantumScop::property_label(PropertyId a) const {
  if (a.index >= properties_.size()) {
    throw UnknownIdError("unknown quantum property");
  }
  return properties_[a.index].first;
}

CorrelationData chsh_quantum_oracle(double alice1, double alice2, double bob1,
                                    double bob2) {
  // Singlet (|01> - |10>)/sqrt(2) in the product basis |00>,|01>,|10>,|11>.
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  HVector singlet(std::vector<Complex>{
      {0.0, 0.0}, {inv_sqrt2, 0.0}, {-inv_sqrt2, 0.0}, {0.0, 0.0}});

  auto analyzer = [](double angle, int outcome) {
    // outcome 0 (+1): basis rotated by `angle`; outcome 1 (-1): its partner.
    if (outcome == 0) {
      return std::pair(std::cos(angle), std::sin(angle));
    }
    return std::pair(-std::sin(angle), std::cos(angle));
  };

  const double alice[2] = {alice1, alice2};
  const double bob[2] = {bob1, bob2};

  CorrelationData data;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      std::vector<Subspace> parts;
      for (int u = 0; u < 2; ++u) {
        auto [a0, a1] = analyzer(alice[i], u);
        for (int v = 0; v < 2; ++v) {
          auto [b0, b1] = analyzer(bob[j], v);
          HVector product(std::vector<Complex>{{a0 * b0, 0.0},
                                               {a0 * b1, 0.0},
                                               {a1 * b0, 0.0},
                                               {a1 * b1, 0.0}});
          parts.push_back(Subspace::span({product}));
        }
      }
      SpectralFamily family(std::move(parts));
      for (const CollapseOutcome& o : q_collapse(family, singlet)) {
        int u = static_cast<int>(o.part_index) / 2;
        int v = static_cast<int>(o.part_index) % 2;
        data.tables[i][j].p[u][v] = o.probability;
      }
    }
  }
  return data;
}

}  // namespace scop
