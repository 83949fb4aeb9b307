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

#ifndef SCOP_DOCUMENT_HPP
#define SCOP_DOCUMENT_HPP

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "scop/core.hpp"
#include "scop/distances.hpp"
#include "scop/hilbert.hpp"
#include "scop/nonclassicality.hpp"

namespace scop {

/// Parsed (but not yet resolved) SCOP definition file. The format is
/// line-oriented: `[section]` headers, one record per line, `#` comments.
/// Sections: [lattice] [states] [contexts] [kernel] [weights] [quantum]
/// [petfish]. See README for the record grammar.
struct ScopDocument {
  bool has_lattice = false;
  LatticeDefinition lattice;

  std::vector<std::pair<std::string, int>> states;    // (label, line)
  std::vector<std::pair<std::string, int>> contexts;  // (label, line)

  struct KernelRecord {
    std::string e, p, f, q;
    double probability;
    int line;
  };
  std::vector<KernelRecord> kernel;

  struct WeightRecord {
    std::string p, e, a;
    double weight;
    int line;
  };
  std::vector<WeightRecord> weights;

  bool has_quantum = false;
  struct QuantumSection {
    std::size_t dimension = 0;
    int dimension_line = 0;
    struct VectorRecord {
      std::string label;
      std::vector<Complex> components;
      int line;
    };
    std::vector<VectorRecord> vectors;
    struct FamilyRecord {
      std::string label;
      std::vector<std::vector<std::string>> parts;  // vector labels per part
      int line;
    };
    std::vector<FamilyRecord> families;
  } quantum;

  bool has_petfish = false;
  struct PetfishSection {
    std::string before_state;
    std::string guppy_state;
    std::string pet_context;
    std::string fish_context;
    std::string petfish_context;
    std::vector<std::string> features;
    // (state, context) pairs whose ν profiles enter the weight-distance
    // comparisons, in the order guppy, pet, fish, petfish.
    std::array<std::pair<std::string, std::string>, 4> weight_pairs;
    int line = 0;
  } petfish;
};

/// Throws ParseError (with 1-based line/column) on malformed input.
ScopDocument parse_scop_text(std::string_view text);

/// Pet Fish role bindings resolved against a loaded system.
struct PetfishRoles {
  StateId before_state;
  StateId guppy_state;
  ContextId pet_context;
  ContextId fish_context;
  ContextId petfish_context;
  std::vector<PropertyId> features;
  std::array<std::pair<StateId, ContextId>, 4> weight_pairs;
};

/// Result of resolving a ScopDocument. Construction is as permissive as
/// representability allows; every failed validation or unresolved reference
/// lands in `report`. Loading is eager: callers other than `validate` must
/// refuse to act when !report.ok().
struct LoadedScop {
  std::shared_ptr<const PropertyLattice> lattice;
  std::optional<ScopSystem> system;
  std::shared_ptr<QuantumScop> quantum;
  std::optional<PetfishRoles> petfish;
  ValidationReport report;
};

LoadedScop load_scop_document(const ScopDocument& doc,
                              double eps_norm = kEpsNormFile);

/// Canonical serialization; parsing it back yields an equivalent system.
std::string serialize(const ScopSystem& system);

/// Feature-profile CSV: header `state,context,<feature>...`, one row per
/// (state, context).
struct ProfileTable {
  std::vector<std::string> features;
  struct Row {
    std::string state;
    std::string context;
    std::vector<double> values;
  };
  std::vector<Row> rows;

  const Row* find(std::string_view state, std::string_view context) const;
  FeatureProfile profile(const Row& row) const;
};

ProfileTable parse_profile_csv(std::string_view text);

/// Correlation data file: four `table Ai Bj` blocks, each followed by the
/// four joint probabilities P(+,+) P(+,-) P(-,+) P(-,-).
CorrelationData parse_correlation_text(std::string_view text);
std::string serialize(const CorrelationData& data);

}  // namespace scop

#endif  // SCOP_DOCUMENT_HPP
