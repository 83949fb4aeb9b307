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

#ifndef SCOP_HILBERT_HPP
#define SCOP_HILBERT_HPP

#include <complex>
#include <cstddef>
#include <deque>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "scop/core.hpp"
#include "scop/nonclassicality.hpp"
#include "scop/validation.hpp"

namespace scop {

using Complex = std::complex<double>;

/// Orthonormality / normalization tolerance for constructed data.
inline constexpr double kEpsQ = 1e-9;
inline constexpr std::size_t kMaxDimension = 64;

/// Vector in a finite-dimensional complex inner-product space.
class HVector {
 public:
  HVector() = default;
  explicit HVector(std::vector<Complex> components);
  static HVector zero(std::size_t dim);
  static HVector basis(std::size_t dim, std::size_t i);

  std::size_t dim() const { return c_.size(); }
  Complex& operator[](std::size_t i) { return c_[i]; }
  const Complex& operator[](std::size_t i) const { return c_[i]; }
  std::span<const Complex> components() const { return c_; }

  HVector& operator+=(const HVector& o);
  HVector& operator-=(const HVector& o);
  HVector& operator*=(Complex s);
  friend HVector operator+(HVector a, const HVector& b) { return a += b; }
  friend HVector operator-(HVector a, const HVector& b) { return a -= b; }
  friend HVector operator*(Complex s, HVector v) { return v *= s; }

  bool is_unit(double eps = kEpsQ) const;

 private:
  std::vector<Complex> c_;
};

/// Inproduct: conjugate-symmetric, linear in the second argument,
/// i.e. <x, y + λz> = <x,y> + λ<x,z>.
Complex inner(const HVector& x, const HVector& y);
double h_norm(const HVector& x);
double h_distance(const HVector& x, const HVector& y);
/// arccos |<x,y>| for unit vectors; throws NonUnitStateError otherwise.
double h_angle(const HVector& x, const HVector& y);

/// Closed subspace, represented by an explicit orthonormal basis. Inputs are
/// orthonormalized at construction (stabilized Gram–Schmidt) and rejected if
/// rank-deficient.
class Subspace {
 public:
  static Subspace span(std::span<const HVector> generators);
  static Subspace span(std::initializer_list<HVector> generators) {
    std::vector<HVector> v(generators);
    return span(std::span<const HVector>(v));
  }

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  std::span<const HVector> basis() const { return basis_; }

  HVector project(const HVector& x) const;
  Subspace orthogonal_complement() const;

 private:
  Subspace(std::size_t ambient, std::vector<HVector> basis)
      : ambient_(ambient), basis_(std::move(basis)) {}

  std::size_t ambient_;
  std::vector<HVector> basis_;
};

HVector project(const Subspace& m, const HVector& x);
/// Weight ν(x, M) = <x, P_M(x)>, real in [0,1]; x must be a unit vector.
double q_weight(const HVector& x, const Subspace& m);

/// Measurement context: mutually orthogonal subspaces spanning the space.
class SpectralFamily {
 public:
  explicit SpectralFamily(std::vector<Subspace> parts);

  std::span<const Subspace> parts() const { return parts_; }
  std::size_t ambient_dim() const { return ambient_; }
  /// Orthogonality violations (witness pair and inner product) and
  /// completeness deficit (sum of part dimensions vs the space dimension).
  const ValidationReport& validate() const { return report_; }

 private:
  std::size_t ambient_;
  std::vector<Subspace> parts_;
  ValidationReport report_;
};

struct CollapseOutcome {
  std::size_t part_index;  // which family part the state collapsed onto
  HVector state;           // P_Mi(x) / ||P_Mi(x)||
  double probability;      // <x, P_Mi(x)>
};

/// Collapse of unit vector x under a valid spectral family. Outcomes are
/// listed in part order, only for parts with nonzero projection;
/// probabilities sum to 1 within kEpsQ.
std::vector<CollapseOutcome> q_collapse(const SpectralFamily& family,
                                        const HVector& x);

/// Pure-quantum SCOP realization (states = named unit vectors plus
/// collapse-generated states, contexts = named spectral families, properties
/// = family parts). The context never changes under collapse: every
/// transition entry has f == e.
///
/// Collapse-generated states are interned on demand; the internal registry
/// is mutex-guarded, so const queries remain safe for concurrent use.
class QuantumScop final : public ScopRealization {
 public:
  explicit QuantumScop(std::size_t dim);

  StateId add_state(std::string label, HVector v);
  ContextId add_family(std::string label, SpectralFamily family);

  std::size_t dimension() const { return dim_; }
  const HVector& state_vector(StateId p) const;
  const SpectralFamily& family(ContextId e) const;
  const Subspace& property_subspace(PropertyId a) const;
  /// Property registered for part `index` of family `e` (label "e[index]").
  PropertyId part_property(ContextId e, std::size_t index) const;
  std::size_t property_count() const { return properties_.size(); }

  // ScopRealization contract.
  std::vector<TransitionEntry> transition_distribution(ContextId e,
                                                       StateId p) const override;
  double weight(StateId p, ContextId e, PropertyId a) const override;
  std::vector<StateId> states() const override;
  std::vector<ContextId> contexts() const override;
  const std::string& state_label(StateId p) const override;
  const std::string& context_label(ContextId e) const override;
  std::optional<StateId> find_state(std::string_view label) const override;
  std::optional<ContextId> find_context(std::string_view label) const override;
  std::optional<PropertyId> find_property(std::string_view label) const override;
  const std::string& property_label(PropertyId a) const override;

 private:
  StateId intern_state(const HVector& v, const std::string& hint) const;

  std::size_t dim_;
  mutable std::mutex mu_;
  // Deque so that label/vector references survive later interning.
  mutable std::deque<std::pair<std::string, HVector>> states_;
  std::vector<std::pair<std::string, SpectralFamily>> families_;
  std::vector<std::pair<std::string, Subspace>> properties_;
  std::vector<std::vector<std::uint32_t>> family_properties_;
};

/// Builds singlet-state correlation data for the four setting pairs
/// (A_i, B_j): each party measures in the plane basis rotated by its angle,
/// outcome +1 for the rotated basis vector and -1 for its orthogonal
/// partner. Equal angles give perfect anticorrelation. With the CHSH
/// combination S = E11 + E12 + E21 - E22, the angles
/// (0, 3π/4, 3π/8, -3π/8) are optimal and give S = 2√2.
CorrelationData chsh_quantum_oracle(double alice1, double alice2, double bob1,
                                    double bob2);

}  // namespace scop

#endif  // SCOP_HILBERT_HPP
