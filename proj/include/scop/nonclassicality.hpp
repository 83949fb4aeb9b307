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

#ifndef SCOP_NONCLASSICALITY_HPP
#define SCOP_NONCLASSICALITY_HPP

#include <array>
#include <string>

#include "scop/validation.hpp"

namespace scop {

/// Joint outcome probabilities for one setting pair. Index 0 is outcome +1,
/// index 1 is outcome -1; p[u][v] = P(A outcome u, B outcome v).
struct JointTable {
  std::array<std::array<double, 2>, 2> p{{{0.0, 0.0}, {0.0, 0.0}}};

  double expectation() const {
    return p[0][0] + p[1][1] - p[0][1] - p[1][0];
  }
  ValidationReport validate(const std::string& name) const;
};

/// Correlation data for the fixed 2-setting / 2-outcome scenario:
/// tables[i][j] holds the joint table for settings (A_{i+1}, B_{j+1}).
struct CorrelationData {
  std::array<std::array<JointTable, 2>, 2> tables;

  ValidationReport validate() const;
};

/// CHSH combination S = E11 + E12 + E21 - E22, where E_ij is the expectation
/// of the outcome product under settings (A_i, B_j). |S| <= 2 certifies
/// nothing; |S| > 2 certifies that no classical Kolmogorovian model exists.
/// Throws UnnormalizedTableError on invalid data.
double chsh_value(const CorrelationData& d);

/// The 16 deterministic local strategies: bit k of `strategy` fixes one of
/// the four outcomes (a1, a2, b1, b2), bit set meaning outcome -1.
CorrelationData deterministic_strategy_data(int strategy);
std::string strategy_name(int strategy);

struct FeasibilityResult {
  bool feasible = false;
  /// Mixing weights over the 16 deterministic strategies (feasible case);
  /// they reproduce every input table.
  std::array<double, 16> weights{};
  /// Largest deviation between the witness mixture's tables and the input.
  double max_residual = 0.0;
  /// Farkas certificate describing the violated constraint (infeasible
  /// case): a linear functional nonpositive on every deterministic strategy
  /// but positive on the observed data.
  std::string violated_constraint;
};

/// Decides whether a joint distribution over the 16 deterministic local
/// strategies reproduces all four tables (classical Kolmogorovian model),
/// by dense phase-1 simplex over the fixed-size polytope.
FeasibilityResult kolmogorov_feasible(const CorrelationData& d);

}  // namespace scop

#endif  // SCOP_NONCLASSICALITY_HPP
