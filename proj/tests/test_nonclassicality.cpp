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

#include "scop/nonclassicality.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "scop/errors.hpp"
#include "scop/hilbert.hpp"

namespace scop {
namespace {

const double kPi = std::acos(-1.0);

CorrelationData uniform_independent() {
  CorrelationData d;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      d.tables[i][j].p = {{{0.25, 0.25}, {0.25, 0.25}}};
    }
  }
  return d;
}

CorrelationData mixture(const std::array<double, 16>& weights) {
  CorrelationData d;
  for (int s = 0; s < 16; ++s) {
    CorrelationData pure = deterministic_strategy_data(s);
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        for (int u = 0; u < 2; ++u) {
          for (int v = 0; v < 2; ++v) {
            d.tables[i][j].p[u][v] += weights[s] * pure.tables[i][j].p[u][v];
          }
        }
      }
    }
  }
  return d;
}

double table_deviation(const CorrelationData& a, const CorrelationData& b) {
  double dev = 0.0;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      for (int u = 0; u < 2; ++u) {
        for (int v = 0; v < 2; ++v) {
          dev = std::max(dev, std::abs(a.tables[i][j].p[u][v] -
                                       b.tables[i][j].p[u][v]));
        }
      }
    }
  }
  return dev;
}

TEST(ChshValue, IndependentUniformOutcomesGiveZero) {
  EXPECT_DOUBLE_EQ(chsh_value(uniform_independent()), 0.0);
}

TEST(ChshValue, RejectsUnnormalizedTables) {
  CorrelationData d = uniform_independent();
  d.tables[0][0].p[0][0] = 0.5;  // table now sums to 1.25
  EXPECT_THROW(chsh_value(d), UnnormalizedTableError);
  EXPECT_THROW(kolmogorov_feasible(d), UnnormalizedTableError);

  CorrelationData neg = uniform_independent();
  neg.tables[1][1].p[0][0] = -0.25;
  EXPECT_THROW(chsh_value(neg), UnnormalizedTableError);
}

TEST(ChshValue, AllDeterministicStrategiesRespectClassicalBound) {
  for (int s = 0; s < 16; ++s) {
    CorrelationData d = deterministic_strategy_data(s);
    EXPECT_TRUE(d.validate().ok());
    EXPECT_LE(std::abs(chsh_value(d)), 2.0 + 1e-12) << strategy_name(s);
  }
}

TEST(ChshValue, ExpectationArithmetic) {
  JointTable t;
  t.p = {{{0.4, 0.1}, {0.2, 0.3}}};
  EXPECT_NEAR(t.expectation(), 0.4 + 0.3 - 0.1 - 0.2, 1e-15);
}

TEST(KolmogorovFeasible, DeterministicStrategiesAreFeasible) {
  for (int s = 0; s < 16; ++s) {
    auto result = kolmogorov_feasible(deterministic_strategy_data(s));
    EXPECT_TRUE(result.feasible) << strategy_name(s);
    EXPECT_LE(result.max_residual, 1e-9);
  }
}

TEST(KolmogorovFeasible, RandomMixturesRoundTrip) {
  std::mt19937_64 rng(777);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    std::array<double, 16> weights{};
    double total = 0.0;
    for (auto& w : weights) {
      w = unit(rng);
      total += w;
    }
    for (auto& w : weights) w /= total;

    CorrelationData d = mixture(weights);
    auto result = kolmogorov_feasible(d);
    ASSERT_TRUE(result.feasible);
    EXPECT_LE(result.max_residual, 1e-9);
    // The recovered mixture reproduces all four tables.
    EXPECT_LE(table_deviation(mixture(result.weights), d), 1e-9);
  }
}

TEST(KolmogorovFeasible, SharedCoinPerfectCorrelation) {
  std::array<double, 16> weights{};
  weights[0] = 0.5;   // all outcomes +1
  weights[15] = 0.5;  // all outcomes -1
  CorrelationData d = mixture(weights);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      EXPECT_DOUBLE_EQ(d.tables[i][j].p[0][0], 0.5);
      EXPECT_DOUBLE_EQ(d.tables[i][j].p[1][1], 0.5);
    }
  }
  auto result = kolmogorov_feasible(d);
  EXPECT_TRUE(result.feasible);
  EXPECT_LE(result.max_residual, 1e-9);
}

TEST(KolmogorovFeasible, SingletOptimalAnglesInfeasible) {
  auto data = chsh_quantum_oracle(0.0, 3 * kPi / 4, 3 * kPi / 8, -3 * kPi / 8);
  ASSERT_NEAR(chsh_value(data), 2 * std::sqrt(2.0), 1e-9);
  auto result = kolmogorov_feasible(data);
  EXPECT_FALSE(result.feasible);
  EXPECT_FALSE(result.violated_constraint.empty());
}

TEST(KolmogorovFeasible, SuperQuantumBoxInfeasible) {
  // PR-box-style data: perfectly correlated except anti-correlated on
  // (A2, B2). S = 4; certainly no classical model.
  CorrelationData d;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      if (i == 1 && j == 1) {
        d.tables[i][j].p = {{{0.0, 0.5}, {0.5, 0.0}}};
      } else {
        d.tables[i][j].p = {{{0.5, 0.0}, {0.0, 0.5}}};
      }
    }
  }
  EXPECT_NEAR(chsh_value(d), 4.0, 1e-12);
  EXPECT_FALSE(kolmogorov_feasible(d).feasible);
}

TEST(KolmogorovFeasible, ChshViolationImpliesInfeasible) {
  // |S| > 2 => no classical model (the converse is not asserted).
  std::mt19937_64 rng(888);
  std::uniform_real_distribution<double> angle(-kPi, kPi);
  int violators = 0;
  for (int trial = 0; trial < 40; ++trial) {
    auto data = chsh_quantum_oracle(angle(rng), angle(rng), angle(rng),
                                    angle(rng));
    if (std::abs(chsh_value(data)) > 2.0 + 1e-9) {
      ++violators;
      EXPECT_FALSE(kolmogorov_feasible(data).feasible);
    }
  }
  EXPECT_GT(violators, 0);  // random angles do hit the nonclassical region
}

}  // namespace
}  // namespace scop
