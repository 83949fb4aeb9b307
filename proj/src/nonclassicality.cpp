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

#include <cmath>
#include <sstream>
#include <vector>

#include "scop/errors.hpp"

namespace scop {

namespace {

constexpr double kTableEps = 1e-9;
constexpr int kStrategies = 16;
constexpr int kConstraints = 16;  // 4 setting pairs x 4 joint outcomes

std::string setting_name(int i, int j, int u, int v) {
  std::ostringstream os;
  os << "A" << (i + 1) << "B" << (j + 1) << "(" << (u == 0 ? "+" : "-") << ","
     << (v == 0 ? "+" : "-") << ")";
  return os.str();
}

// Outcome of party A's setting i (0-based) under strategy s: 0 for +1.
int a_out(int s, int i) { return (s >> i) & 1; }
int b_out(int s, int j) { return (s >> (2 + j)) & 1; }

// Constraint row index for (setting pair, joint outcome).
int row_of(int i, int j, int u, int v) { return ((i * 2 + j) * 2 + u) * 2 + v; }

}  // namespace

ValidationReport JointTable::validate(const std::string& name) const {
  ValidationReport report;
  double sum = 0.0;
  for (int u = 0; u < 2; ++u) {
    for (int v = 0; v < 2; ++v) {
      if (p[u][v] < 0.0 || p[u][v] > 1.0) {
        std::ostringstream os;
        os << name << " entry " << setting_name(0, 0, u, v).substr(4)
           << " = " << p[u][v] << " outside [0,1]";
        report.add("table.range", os.str());
      }
      sum += p[u][v];
    }
  }
  if (std::abs(sum - 1.0) > kTableEps) {
    std::ostringstream os;
    os << name << " sums to " << sum;
    report.add("table.normalization", os.str());
  }
  return report;
}

ValidationReport CorrelationData::validate() const {
  ValidationReport report;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      std::ostringstream name;
      name << "table A" << (i + 1) << "B" << (j + 1);
      report.merge(tables[i][j].validate(name.str()));
    }
  }
  return report;
}

double chsh_value(const CorrelationData& d) {
  ValidationReport report = d.validate();
  if (!report.ok()) {
    throw UnnormalizedTableError("invalid correlation data: " +
                                 report.violations.front().detail);
  }
  const double e11 = d.tables[0][0].expectation();
  const double e12 = d.tables[0][1].expectation();
  const double e21 = d.tables[1][0].expectation();
  const double e22 = d.tables[1][1].expectation();
  return e11 + e12 + e21 - e22;
}

CorrelationData deterministic_strategy_data(int strategy) {
  CorrelationData d;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      d.tables[i][j].p[a_out(strategy, i)][b_out(strategy, j)] = 1.0;
    }
  }
  return d;
}

std::string strategy_name(int strategy) {
  std::string s = "a1a2b1b2=";
  for (int k = 0; k < 4; ++k) s += ((strategy >> k) & 1) ? '-' : '+';
  return s;
}

FeasibilityResult kolmogorov_feasible(const CorrelationData& d) {
  ValidationReport report = d.validate();
  if (!report.ok()) {
    throw UnnormalizedTableError("invalid correlation data: " +
                                 report.violations.front().detail);
  }

  // Phase-1 simplex: minimize the sum of artificial variables subject to
  //   A λ + art = b,  λ >= 0, art >= 0,
  // where column s of A is the 16 joint indicators of strategy s and b is
  // the observed probability vector. b >= 0, so the artificial basis is
  // feasible. Σλ = 1 is implied by each table's normalization.
  constexpr int kCols = kStrategies + kConstraints;
  std::vector<std::array<double, kCols + 1>> tab(kConstraints);
  std::array<int, kConstraints> basis{};

  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      for (int u = 0; u < 2; ++u) {
        for (int v = 0; v < 2; ++v) {
          int r = row_of(i, j, u, v);
          for (int s = 0; s < kStrategies; ++s) {
            tab[r][s] =
                (a_out(s, i) == u && b_out(s, j) == v) ? 1.0 : 0.0;
          }
          tab[r][kStrategies + r] = 1.0;
          tab[r][kCols] = d.tables[i][j].p[u][v];
          basis[r] = kStrategies + r;
        }
      }
    }
  }

  // Objective row: reduced costs for cost vector (0 on λ, 1 on artificials),
  // expressed with the artificial basis priced out.
  std::array<double, kCols + 1> obj{};
  for (int c = 0; c <= kCols; ++c) {
    double sum = 0.0;
    for (int r = 0; r < kConstraints; ++r) sum += tab[r][c];
    obj[c] = (c < kStrategies ? 0.0 : (c < kCols ? 1.0 : 0.0)) - sum;
  }

  // Bland's rule keeps the iteration finite under degeneracy.
  const double kPivotEps = 1e-12;
  for (;;) {
    int enter = -1;
    for (int c = 0; c < kCols; ++c) {
      if (obj[c] < -kPivotEps) {
        enter = c;
        break;
      }
    }
    if (enter < 0) break;
    int leave = -1;
    double best = 0.0;
    for (int r = 0; r < kConstraints; ++r) {
      if (tab[r][enter] > kPivotEps) {
        double ratio = tab[r][kCols] / tab[r][enter];
        if (leave < 0 || ratio < best - kPivotEps ||
            (ratio < best + kPivotEps && basis[r] < basis[leave])) {
          leave = r;
          best = ratio;
        }
      }
    }
    if (leave < 0) break;  // unbounded cannot happen here
    double pivot = tab[leave][enter];
    for (int c = 0; c <= kCols; ++c) tab[leave][c] /= pivot;
    for (int r = 0; r < kConstraints; ++r) {
      if (r == leave) continue;
      double factor = tab[r][enter];
      if (factor == 0.0) continue;
      for (int c = 0; c <= kCols; ++c) tab[r][c] -= factor * tab[leave][c];
    }
    double factor = obj[enter];
    for (int c = 0; c <= kCols; ++c) obj[c] -= factor * tab[leave][c];
    basis[leave] = enter;
  }

  FeasibilityResult result;
  const double objective = -obj[kCols];

  if (objective <= 1e-9) {
    result.feasible = true;
    for (int r = 0; r < kConstraints; ++r) {
      if (basis[r] < kStrategies) {
        // Degenerate pivots can leave tiny negative values.
        result.weights[basis[r]] = std::max(0.0, tab[r][kCols]);
      }
    }
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        for (int u = 0; u < 2; ++u) {
          for (int v = 0; v < 2; ++v) {
            double rebuilt = 0.0;
            for (int s = 0; s < kStrategies; ++s) {
              if (a_out(s, i) == u && b_out(s, j) == v)
                rebuilt += result.weights[s];
            }
            result.max_residual = std::max(
                result.max_residual, std::abs(rebuilt - d.tables[i][j].p[u][v]));
          }
        }
      }
    }
    return result;
  }

  // Infeasible: the simplex multipliers y give a Farkas certificate
  // y·b > 0 with y·A_s <= 0 for every strategy s. The multiplier of row r
  // is 1 minus the reduced cost of its artificial column.
  result.feasible = false;
  std::array<double, kConstraints> y{};
  for (int r = 0; r < kConstraints; ++r) y[r] = 1.0 - obj[kStrategies + r];
  std::ostringstream os;
  os << "violated inequality: sum(";
  bool first = true;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      for (int u = 0; u < 2; ++u) {
        for (int v = 0; v < 2; ++v) {
          double c = y[row_of(i, j, u, v)];
          if (std::abs(c) < 1e-9) continue;
          if (!first) os << " + ";
          os << c << "*P[" << setting_name(i, j, u, v) << "]";
          first = false;
        }
      }
    }
  }
  os << ") = " << objective
     << " > 0, but the combination is <= 0 for every deterministic local "
        "strategy";
  result.violated_constraint = os.str();
  return result;
}

}  // namespace scop
