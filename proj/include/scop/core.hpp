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

#ifndef SCOP_CORE_HPP
#define SCOP_CORE_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "scop/ids.hpp"
#include "scop/lattice.hpp"
#include "scop/validation.hpp"

namespace scop {

/// Normalization tolerance for data constructed in memory. Ingested files
/// are checked at the looser kEpsNormFile since hand-authored values carry
/// decimal rounding.
inline constexpr double kEpsNorm = 1e-9;
inline constexpr double kEpsNormFile = 1e-6;

/// One outcome of a couple (e, p): the new couple (f, q) and its probability.
struct TransitionEntry {
  ContextId f;
  StateId q;
  double probability;
};

enum class CoupleClass { Potentiality, Deterministic, Eigen };

std::string_view to_string(CoupleClass c);

/// Deterministic, caller-owned random source. All sampling in the library
/// draws from an explicitly passed source; the library holds no hidden
/// mutable state. A given seed reproduces the identical stream on every
/// platform (mt19937_64 semantics are pinned by the standard).
class SeededRandomSource {
 public:
  explicit SeededRandomSource(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }
  /// Uniform in [0, 1) with 53 random bits.
  double next_unit() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

 private:
  std::mt19937_64 engine_;
};

/// Behavior contract shared by the tabular ScopSystem and the quantum
/// realization: enough surface for the collapse operations and the
/// probability-based distance measures to run identically over both.
class ScopRealization {
 public:
  virtual ~ScopRealization() = default;

  /// Full normalized outcome distribution of the couple (e, p).
  /// Throws UnknownCoupleError when the couple has no distribution.
  virtual std::vector<TransitionEntry> transition_distribution(
      ContextId e, StateId p) const = 0;

  /// ν(p, e, a); throws UnknownEntryError when undefined.
  virtual double weight(StateId p, ContextId e, PropertyId a) const = 0;

  virtual std::vector<StateId> states() const = 0;
  virtual std::vector<ContextId> contexts() const = 0;
  virtual const std::string& state_label(StateId p) const = 0;
  virtual const std::string& context_label(ContextId e) const = 0;
  virtual std::optional<StateId> find_state(std::string_view label) const = 0;
  virtual std::optional<ContextId> find_context(
      std::string_view label) const = 0;
  virtual std::optional<PropertyId> find_property(
      std::string_view label) const = 0;
  virtual const std::string& property_label(PropertyId a) const = 0;

  /// Reduced probability μ(q, e, p) = Σ_f μ(f, q, e, p).
  double reduced_probability(StateId q, ContextId e, StateId p) const;
};

/// Classifies (e, p): Deterministic when a single outcome carries
/// probability 1 (within eps), Eigen when that outcome additionally leaves
/// the state unchanged, Potentiality otherwise.
CoupleClass classify_couple(const ScopRealization& s, ContextId e, StateId p,
                            double eps = kEpsNorm);

/// Draws one outcome by inverse CDF over the entries in canonical sorted
/// (f, q) id order, so a given seed reproduces across platforms and across
/// realization implementations.
TransitionEntry sample_collapse(const ScopRealization& s, ContextId e,
                                StateId p, SeededRandomSource& rng);

struct CollapseTrajectory {
  std::vector<std::pair<ContextId, StateId>> couples;  // includes (e0, p0)
  /// Set when the walk stopped early on an eigencouple (a fixed point);
  /// holds the index of the step that was not taken.
  std::optional<std::size_t> truncated_at;
};

/// Iterates sample_collapse, feeding each output couple back in.
/// An unknown couple mid-sequence raises UnknownCoupleError naming the step.
CollapseTrajectory collapse_sequence(const ScopRealization& s, ContextId e0,
                                     StateId p0, std::size_t steps,
                                     SeededRandomSource& rng);

/// Sparse transition kernel μ(f, q, e, p). Rows are kept sorted by (f, q)
/// id, which is the canonical sampling order. Absent rows are undefined
/// (queries throw), never implicit identities.
class TransitionKernel {
 public:
  void add(ContextId e, StateId p, ContextId f, StateId q, double probability);
  const std::vector<TransitionEntry>* row(ContextId e, StateId p) const;
  const std::map<std::pair<std::uint32_t, std::uint32_t>,
                 std::vector<TransitionEntry>>&
  rows() const {
    return rows_;
  }
  std::size_t row_count() const { return rows_.size(); }

 private:
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::vector<TransitionEntry>>
      rows_;
};

/// Sparse weight table ν(p, e, a). Partial tables are allowed.
class WeightTable {
 public:
  void set(StateId p, ContextId e, PropertyId a, double w);
  std::optional<double> get(StateId p, ContextId e, PropertyId a) const;
  const std::map<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>,
                 double>&
  entries() const {
    return entries_;
  }
  std::size_t size() const { return entries_.size(); }

 private:
  std::map<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>, double>
      entries_;
};

/// The SCOP quintuple (Σ, M, L, μ, ν) with explicit registries. Immutable
/// by convention once populated and validated; all queries are const.
class ScopSystem final : public ScopRealization {
 public:
  explicit ScopSystem(std::shared_ptr<const PropertyLattice> lattice);

  StateId add_state(std::string label);
  ContextId add_context(std::string label);
  void set_transition(ContextId e, StateId p, ContextId f, StateId q,
                      double probability);
  void set_weight(StateId p, ContextId e, PropertyId a, double w);

  const PropertyLattice& lattice() const { return *lattice_; }
  std::shared_ptr<const PropertyLattice> lattice_ptr() const {
    return lattice_;
  }
  const TransitionKernel& kernel() const { return kernel_; }
  const WeightTable& weights() const { return weights_; }
  std::size_t state_count() const { return states_.size(); }
  std::size_t context_count() const { return contexts_.size(); }

  /// Kernel rows must sum to 1 (within eps), probabilities and weights must
  /// lie in [0,1], and complementary weight pairs must sum to 1.
  ValidationReport validate(double eps = kEpsNorm) const;

  /// Relative SCOP: restricts to states where property `a` is actual,
  /// operationalized as ν(p, e, a) >= threshold for every context e where
  /// that weight is defined (states with no entry for `a` survive
  /// vacuously). Kernel rows are restricted to surviving targets and
  /// renormalized; rows with no surviving mass are dropped. Throws
  /// EmptyRestrictionError when no state survives — the conjunction is
  /// incoherent under this threshold.
  ScopSystem relativize(PropertyId a, double threshold = 1.0) const;

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
  std::shared_ptr<const PropertyLattice> lattice_;
  LabelRegistry states_;
  LabelRegistry contexts_;
  TransitionKernel kernel_;
  WeightTable weights_;
};

}  // namespace scop

#endif  // SCOP_CORE_HPP
