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

#include "scop/distances.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "scop/errors.hpp"

namespace scop {

namespace {

constexpr double kValueEps = 1e-12;

double euclidean(std::span<const double> a, std::span<const double> b) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    double d = a[i] - b[i];
    sum += d * d;
  }
  return std::sqrt(sum);
}

void require_same_features(const FeatureProfile& a, const FeatureProfile& b) {
  if (!a.same_features(b)) {
    throw FeatureMismatchError("profiles do not share a feature list");
  }
}

double checked_probability(double mu) {
  if (mu < -kValueEps || mu > 1.0 + kValueEps) {
    throw Error("probability " + std::to_string(mu) + " outside [0, 1]");
  }
  return std::min(1.0, std::max(0.0, mu));
}

}  // namespace

FeatureProfile::FeatureProfile(std::vector<std::string> features,
                               std::vector<double> values)
    : features_(std::move(features)), values_(std::move(values)) {
  if (features_.size() != values_.size()) {
    throw ProfileError("profile has " + std::to_string(features_.size()) +
                       " features but " + std::to_string(values_.size()) +
                       " values");
  }
  std::set<std::string> seen;
  for (const auto& f : features_) {
    if (!seen.insert(f).second) {
      throw ProfileError("duplicate feature '" + f + "' in profile");
    }
  }
  for (double v : values_) {
    if (!(v >= 0.0 && v <= 1.0)) {
      throw ProfileError("profile value " + std::to_string(v) +
                         " outside [0, 1]");
    }
  }
}

bool FeatureProfile::same_features(const FeatureProfile& other) const {
  return features_ == other.features_;
}

std::pair<FeatureProfile, FeatureProfile> FeatureProfile::merged(
    const FeatureProfile& a, const FeatureProfile& b) {
  std::map<std::string, std::pair<double, double>> merged;
  for (std::size_t i = 0; i < a.size(); ++i) {
    merged[a.features_[i]].first = a.values_[i];
  }
  for (std::size_t i = 0; i < b.size(); ++i) {
    merged[b.features_[i]].second = b.values_[i];
  }
  std::vector<std::string> features;
  std::vector<double> va, vb;
  for (const auto& [f, v] : merged) {
    features.push_back(f);
    va.push_back(v.first);
    vb.push_back(v.second);
  }
  return {FeatureProfile(features, va), FeatureProfile(features, vb)};
}

double prototype_distance(const FeatureProfile& stimulus,
                          const FeatureProfile& prototype) {
  require_same_features(stimulus, prototype);
  return euclidean(stimulus.values(), prototype.values());
}

double exemplar_distance(const FeatureProfile& stimulus,
                         const ExemplarSet& exemplars) {
  if (exemplars.exemplars.empty()) {
    throw EmptyExemplarSetError("exemplar set is empty");
  }
  double sum = 0.0;
  for (const auto& [label, profile] : exemplars.exemplars) {
    require_same_features(stimulus, profile);
    sum += euclidean(stimulus.values(), profile.values());
  }
  return sum;
}

double d_mu_from_probability(double mu) {
  return std::sqrt(2.0 * (1.0 - std::sqrt(checked_probability(mu))));
}

double theta_mu_from_probability(double mu) {
  return std::acos(checked_probability(mu));
}

double d_mu(const ScopRealization& s, StateId q, ContextId e, StateId p) {
  return d_mu_from_probability(s.reduced_probability(q, e, p));
}

double theta_mu(const ScopRealization& s, StateId q, ContextId e, StateId p) {
  return theta_mu_from_probability(s.reduced_probability(q, e, p));
}

namespace {

PropertyDistance property_distance(const FeatureProfile& a,
                                   const FeatureProfile& b) {
  PropertyDistance result;
  if (a.same_features(b)) {
    result.raw = euclidean(a.values(), b.values());
    result.feature_count = a.size();
  } else {
    auto [ma, mb] = FeatureProfile::merged(a, b);
    result.raw = euclidean(ma.values(), mb.values());
    result.feature_count = ma.size();
  }
  if (result.feature_count == 0) {
    throw FeatureMismatchError("property distance over an empty feature list");
  }
  result.normalized = std::sqrt(2.0) /
                      std::sqrt(static_cast<double>(result.feature_count)) *
                      result.raw;
  return result;
}

}  // namespace

PropertyDistance d_p(const FeatureProfile& freqs_p,
                     const FeatureProfile& freqs_q) {
  return property_distance(freqs_p, freqs_q);
}

PropertyDistance d_w(const FeatureProfile& weights_p,
                     const FeatureProfile& weights_q) {
  return property_distance(weights_p, weights_q);
}

ComparisonReport weight_frequency_comparison(const FeatureProfile& freqs,
                                             const FeatureProfile& weights,
                                             double tolerance) {
  require_same_features(freqs, weights);
  ComparisonReport report;
  report.tolerance = tolerance;
  for (std::size_t i = 0; i < freqs.size(); ++i) {
    double f = freqs.values()[i];
    double w = weights.values()[i];
    report.entries.push_back(
        {freqs.features()[i], f, w, std::abs(f - w)});
    report.max_abs_difference =
        std::max(report.max_abs_difference, std::abs(f - w));
  }
  report.identity_holds = report.max_abs_difference <= tolerance;
  return report;
}

FeatureProfile profile_from_weights(const ScopRealization& s, StateId p,
                                    ContextId e,
                                    std::span<const PropertyId> features) {
  std::vector<std::string> labels;
  std::vector<double> values;
  for (PropertyId a : features) {
    labels.push_back(s.property_label(a));
    values.push_back(s.weight(p, e, a));
  }
  return FeatureProfile(std::move(labels), std::move(values));
}

FeatureProfile profile_from_frequencies(const ScopRealization& s, ContextId e,
                                        StateId p,
                                        std::span<const StateId> targets) {
  std::vector<std::string> labels;
  std::vector<double> values;
  for (StateId q : targets) {
    labels.push_back(s.state_label(q));
    values.push_back(s.reduced_probability(q, e, p));
  }
  return FeatureProfile(std::move(labels), std::move(values));
}

}  // namespace scop
