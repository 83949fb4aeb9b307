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

#ifndef SCOP_DISTANCES_HPP
#define SCOP_DISTANCES_HPP

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "scop/core.hpp"

namespace scop {

/// Per-(state, context) vector of feature values: applicabilities, weights
/// ν, or elicitation frequencies μ. Values are confined to [0,1].
class FeatureProfile {
 public:
  FeatureProfile(std::vector<std::string> features, std::vector<double> values);

  std::size_t size() const { return features_.size(); }
  std::span<const std::string> features() const { return features_; }
  std::span<const double> values() const { return values_; }

  bool same_features(const FeatureProfile& other) const;

  /// Union of the two feature lists in canonical (label-sorted) order,
  /// absent features filled with 0. Elicitation produces two different
  /// lists; this is the combining step.
  static std::pair<FeatureProfile, FeatureProfile> merged(
      const FeatureProfile& a, const FeatureProfile& b);

 private:
  std::vector<std::string> features_;
  std::vector<double> values_;
};

/// Exemplars E_1..E_N over one shared feature list.
struct ExemplarSet {
  std::vector<std::pair<std::string, FeatureProfile>> exemplars;
};

/// Eq.-(1)-style prototype distance: sqrt(Σ_m (x_sm - x_pm)^2).
/// Requires the stimulus and prototype to share the feature list.
double prototype_distance(const FeatureProfile& stimulus,
                          const FeatureProfile& prototype);

/// Eq.-(2)-style exemplar distance: Σ_n sqrt(Σ_m (x_sm - x_nm)^2).
double exemplar_distance(const FeatureProfile& stimulus,
                         const ExemplarSet& exemplars);

/// d_mu = sqrt(2(1 - sqrt(mu))), in [0, sqrt(2)].
double d_mu_from_probability(double mu);
/// theta_mu = arccos(mu), in [0, pi/2]. Deliberately not arccos(sqrt(mu)):
/// the angle is defined on mu itself and is never interconverted with the
/// Hilbert-space angle.
double theta_mu_from_probability(double mu);

/// Probability conceptual distance between p and its collapse target q
/// under context e. Asymmetric in general; nothing here symmetrizes it.
double d_mu(const ScopRealization& s, StateId q, ContextId e, StateId p);
double theta_mu(const ScopRealization& s, StateId q, ContextId e, StateId p);

struct PropertyDistance {
  double normalized;  // with the sqrt(2)/sqrt(M) factor; maximum sqrt(2)
  double raw;         // plain Euclidean value, no normalization factor
  std::size_t feature_count = 0;
};

/// Probability property distance d_p over collapse-frequency profiles.
/// Profiles with different feature lists are merged (union, zero fill).
PropertyDistance d_p(const FeatureProfile& freqs_p,
                     const FeatureProfile& freqs_q);
/// Weight property distance d_w over ν profiles; same form as d_p.
PropertyDistance d_w(const FeatureProfile& weights_p,
                     const FeatureProfile& weights_q);

struct ComparisonEntry {
  std::string feature;
  double frequency;
  double weight;
  double difference;
};

/// Comparison of elicitation frequencies against rated weights.
/// identity_holds reflects whether the pure-quantum weight = collapse
/// probability identity survives at `tolerance`.
struct ComparisonReport {
  std::vector<ComparisonEntry> entries;
  double max_abs_difference = 0.0;
  double tolerance = 0.0;
  bool identity_holds = false;
};

ComparisonReport weight_frequency_comparison(const FeatureProfile& freqs,
                                             const FeatureProfile& weights,
                                             double tolerance);

/// Adapter: ν(p, e, a) profile for an explicit feature list.
/// Throws UnknownEntryError when a required weight is missing.
FeatureProfile profile_from_weights(const ScopRealization& s, StateId p,
                                    ContextId e,
                                    std::span<const PropertyId> features);

/// Adapter: reduced-probability profile μ(r_m, e, p) over target states r_m.
FeatureProfile profile_from_frequencies(const ScopRealization& s, ContextId e,
                                        StateId p,
                                        std::span<const StateId> targets);

}  // namespace scop

#endif  // SCOP_DISTANCES_HPP
