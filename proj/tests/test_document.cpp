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

#include "scop/document.hpp"

#include <gtest/gtest.h>

#include <memory>

#include "scop/errors.hpp"
#include "scop/report.hpp"

namespace scop {
namespace {

constexpr const char* kTinyDoc = R"(# comment line
[lattice]
element 0
element a
element na
element I
order 0 a
order 0 na
order a I
order na I
order 0 I
complement 0 I
complement I 0
complement a na
complement na a
bottom 0
top I

[states]
state p
state q

[contexts]
context e

[kernel]
mu e p e q 0.75   # inline comment
mu e p e p 0.25
mu e q e q 1.0

[weights]
nu p e a 0.8
nu p e na 0.2
)";

TEST(Parse, TinyDocumentCounts) {
  ScopDocument doc = parse_scop_text(kTinyDoc);
  EXPECT_TRUE(doc.has_lattice);
  EXPECT_EQ(doc.lattice.elements.size(), 4u);
  EXPECT_EQ(doc.lattice.order.size(), 5u);
  EXPECT_EQ(doc.lattice.complements.size(), 4u);
  EXPECT_EQ(doc.states.size(), 2u);
  EXPECT_EQ(doc.contexts.size(), 1u);
  EXPECT_EQ(doc.kernel.size(), 3u);
  EXPECT_EQ(doc.weights.size(), 2u);
  EXPECT_DOUBLE_EQ(doc.kernel[0].probability, 0.75);
  EXPECT_FALSE(doc.has_quantum);
  EXPECT_FALSE(doc.has_petfish);
}

TEST(Parse, LoadedSystemIsValid) {
  LoadedScop loaded = load_scop_document(parse_scop_text(kTinyDoc));
  EXPECT_TRUE(loaded.report.ok()) << loaded.report.to_string();
  ASSERT_TRUE(loaded.system.has_value());
  EXPECT_EQ(loaded.system->state_count(), 2u);
  auto p = loaded.system->find_state("p");
  auto e = loaded.system->find_context("e");
  ASSERT_TRUE(p && e);
  EXPECT_NEAR(loaded.system->reduced_probability(
                  *loaded.system->find_state("q"), *e, *p),
              0.75, 1e-15);
}

TEST(Parse, ErrorsCarryLocation) {
  try {
    parse_scop_text("[lattice\nelement a\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 1);
    EXPECT_EQ(e.column(), 1);
  }

  try {
    parse_scop_text("[kernel]\nmu e p e q nope\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2);
    EXPECT_GT(e.column(), 1);
    EXPECT_NE(std::string(e.what()).find("nope"), std::string::npos);
  }

  EXPECT_THROW(parse_scop_text("element a\n"), ParseError);  // outside section
  EXPECT_THROW(parse_scop_text("[nosuch]\n"), ParseError);
  EXPECT_THROW(parse_scop_text("[kernel]\nmu e p e q\n"), ParseError);
}

TEST(Load, UnresolvedReferencesBecomeViolations) {
  std::string text = std::string(kTinyDoc) + "\n[kernel]\nmu e ghost e q 1.0\n";
  LoadedScop loaded = load_scop_document(parse_scop_text(text));
  EXPECT_FALSE(loaded.report.ok());
  EXPECT_TRUE(loaded.report.has_rule("document.kernel"));
}

TEST(Load, DuplicateIdentifiersBecomeViolations) {
  std::string text = std::string(kTinyDoc) + "\n[states]\nstate p\n";
  LoadedScop loaded = load_scop_document(parse_scop_text(text));
  EXPECT_TRUE(loaded.report.has_rule("document.states"));

  text = std::string(kTinyDoc) + "\n[kernel]\nmu e p e q 0.1\n";
  loaded = load_scop_document(parse_scop_text(text));
  EXPECT_TRUE(loaded.report.has_rule("document.kernel"));

  text = std::string(kTinyDoc) + "\n[weights]\nnu p e a 0.1\n";
  loaded = load_scop_document(parse_scop_text(text));
  EXPECT_TRUE(loaded.report.has_rule("document.weights"));
}

TEST(Load, KernelRowSumViolationNamed) {
  std::string text = kTinyDoc;
  auto pos = text.find("0.75");
  text.replace(pos, 4, "0.70");
  LoadedScop loaded = load_scop_document(parse_scop_text(text));
  ASSERT_FALSE(loaded.report.ok());
  EXPECT_TRUE(loaded.report.has_rule("kernel.normalization"));
  bool found = false;
  for (const auto& v : loaded.report.violations) {
    if (v.detail.find("(e, p)") != std::string::npos &&
        v.detail.find("0.95") != std::string::npos) {
      found = true;
    }
  }
  EXPECT_TRUE(found) << loaded.report.to_string();
}

TEST(Load, BrokenLatticeRejected) {
  std::string text = kTinyDoc;
  // complement a na -> complement a I (involution/meet broken)
  auto pos = text.find("complement a na");
  text.replace(pos, 15, "complement a I ");
  LoadedScop loaded = load_scop_document(parse_scop_text(text));
  EXPECT_FALSE(loaded.report.ok());
}

TEST(Load, FileToleranceAcceptsRoundedRows) {
  // Row sums to 0.9999999: inside the 1e-6 file tolerance, outside 1e-9.
  std::string text = R"([lattice]
element 0
element I
order 0 I
complement 0 I
complement I 0
bottom 0
top I
[states]
state p
state a
state b
state c
[contexts]
context e
[kernel]
mu e p e a 0.3333333
mu e p e b 0.3333333
mu e p e c 0.3333333
)";
  LoadedScop loaded = load_scop_document(parse_scop_text(text));
  EXPECT_TRUE(loaded.report.ok()) << loaded.report.to_string();
  LoadedScop strict = load_scop_document(parse_scop_text(text), 1e-9);
  EXPECT_TRUE(strict.system->validate(1e-6).ok());
  EXPECT_FALSE(strict.report.ok());
}

TEST(RoundTrip, SerializeParseSerializeIsStable) {
  LoadedScop loaded = load_scop_document(parse_scop_text(kTinyDoc));
  ASSERT_TRUE(loaded.system.has_value());
  std::string first = serialize(*loaded.system);
  LoadedScop reloaded = load_scop_document(parse_scop_text(first));
  ASSERT_TRUE(reloaded.system.has_value());
  EXPECT_TRUE(reloaded.report.ok()) << reloaded.report.to_string();
  std::string second = serialize(*reloaded.system);
  EXPECT_EQ(first, second);  // canonical form is a fixed point

  // And the reloaded system is behaviorally equivalent.
  auto e = *reloaded.system->find_context("e");
  auto p = *reloaded.system->find_state("p");
  auto q = *reloaded.system->find_state("q");
  EXPECT_DOUBLE_EQ(reloaded.system->reduced_probability(q, e, p), 0.75);
  EXPECT_DOUBLE_EQ(
      reloaded.system->weight(p, e, reloaded.system->lattice().element("a")),
      0.8);
}

TEST(RoundTrip, RandomSystemsSerializeStably) {
  std::mt19937_64 rng(4242);
  std::uniform_real_distribution<double> unit(0.01, 1.0);
  for (int trial = 0; trial < 10; ++trial) {
    auto lattice = std::make_shared<const PropertyLattice>(
        PropertyLattice::powerset({"u", "v"}));
    ScopSystem sys(lattice);
    std::vector<StateId> states;
    for (int i = 0; i < 5; ++i) {
      states.push_back(sys.add_state("s" + std::to_string(i)));
    }
    ContextId e = sys.add_context("e");
    ContextId f = sys.add_context("f");
    for (StateId p : states) {
      double w1 = unit(rng), w2 = unit(rng), w3 = unit(rng);
      double total = w1 + w2 + w3;
      sys.set_transition(e, p, e, states[0], w1 / total);
      sys.set_transition(e, p, f, states[1], w2 / total);
      sys.set_transition(e, p, f, states[4], w3 / total);
      double nu = unit(rng);
      sys.set_weight(p, e, lattice->element("{u}"), nu);
      sys.set_weight(p, e, lattice->complement_of(lattice->element("{u}")),
                     1.0 - nu);
    }
    std::string first = serialize(sys);
    LoadedScop reloaded = load_scop_document(parse_scop_text(first));
    ASSERT_TRUE(reloaded.report.ok()) << reloaded.report.to_string();
    EXPECT_EQ(first, serialize(*reloaded.system));
  }
}

TEST(Quantum, DimensionBounds) {
  LoadedScop zero = load_scop_document(parse_scop_text("[quantum]\ndimension 0\n"));
  EXPECT_TRUE(zero.report.has_rule("document.quantum"));
  LoadedScop big = load_scop_document(parse_scop_text("[quantum]\ndimension 65\n"));
  EXPECT_TRUE(big.report.has_rule("document.quantum"));
  EXPECT_THROW(parse_scop_text("[quantum]\ndimension -1\n"), ParseError);
}

TEST(Quantum, SectionLoads) {
  std::string text = R"([quantum]
dimension 2
vector e1 1 0 0 0
vector e2 0 0 1 0
vector plus 0.70710678118654752 0 0.70710678118654752 0
family Z e1 | e2
family X plus | e1
)";
  // X is not a valid family (plus and e1 are not orthogonal): violation.
  LoadedScop loaded = load_scop_document(parse_scop_text(text));
  ASSERT_TRUE(loaded.quantum != nullptr);
  EXPECT_FALSE(loaded.report.ok());
  EXPECT_TRUE(loaded.report.has_rule("family.orthogonality"));
  // Z loaded fine.
  EXPECT_TRUE(loaded.quantum->find_context("Z").has_value());
}

TEST(Quantum, RejectsBadVectors) {
  std::string text = R"([quantum]
dimension 2
vector big 2 0 0 0
vector small 1 0
)";
  LoadedScop loaded = load_scop_document(parse_scop_text(text));
  EXPECT_FALSE(loaded.report.ok());
  // Non-unit and wrong-dimension vectors both reported.
  EXPECT_EQ(loaded.report.violations.size(), 2u);
}

TEST(Csv, ParseAndLookup) {
  std::string text =
      "state,context,f1,f2\n"
      "guppy,stimulus,0.9,0.1\n"
      "pet,prototype,0.2,0.8\n";
  ProfileTable table = parse_profile_csv(text);
  ASSERT_EQ(table.features.size(), 2u);
  ASSERT_EQ(table.rows.size(), 2u);
  const auto* row = table.find("guppy", "stimulus");
  ASSERT_NE(row, nullptr);
  FeatureProfile profile = table.profile(*row);
  EXPECT_DOUBLE_EQ(profile.values()[0], 0.9);
  EXPECT_EQ(table.find("guppy", "nope"), nullptr);

  EXPECT_THROW(parse_profile_csv("bad,header\n"), ParseError);
  EXPECT_THROW(parse_profile_csv("state,context,f\nx,y,1,2\n"), ParseError);
  EXPECT_THROW(parse_profile_csv("state,context,f\nx,y,abc\n"), ParseError);
  EXPECT_THROW(parse_profile_csv(""), ParseError);
}

TEST(CorrelationFile, RoundTrip) {
  CorrelationData data;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      data.tables[i][j].p = {{{0.25, 0.25}, {0.25, 0.25}}};
    }
  }
  data.tables[1][1].p = {{{0.1, 0.4}, {0.4, 0.1}}};
  std::string text = serialize(data);
  CorrelationData parsed = parse_correlation_text(text);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      for (int u = 0; u < 2; ++u) {
        for (int v = 0; v < 2; ++v) {
          EXPECT_DOUBLE_EQ(parsed.tables[i][j].p[u][v],
                           data.tables[i][j].p[u][v]);
        }
      }
    }
  }

  EXPECT_THROW(parse_correlation_text("table A1 B1\n0.5 0.5 0 0\n"),
               ParseError);  // missing tables
  EXPECT_THROW(parse_correlation_text(text + "table A1 B1\n0 0 0 1\n"),
               ParseError);  // duplicate
  EXPECT_THROW(parse_correlation_text("table A3 B1\n0 0 0 1\n"), ParseError);
}

TEST(Report, Fixed9AndDigest) {
  EXPECT_EQ(format_fixed9(0.05), "0.050000000");
  EXPECT_EQ(format_fixed9(-0.0), "0.000000000");
  EXPECT_EQ(format_fixed9(1.0 / 3.0), "0.333333333");
  EXPECT_EQ(format_fixed9(2.0 * std::sqrt(2.0)), "2.828427125");
  // FNV-1a test vector.
  EXPECT_EQ(fnv1a64(""), 0xcbf29ce484222325ull);
  EXPECT_EQ(fnv1a64_hex("a"), "af63dc4c8601ec8c");
}

TEST(Report, TextAndStructuredAreStable) {
  RunReport report("demo");
  report.add_input("file.scop", "bytes");
  report.set_seed(42);
  report.kv("value", 0.5);
  report.line("plain line");
  ValidationReport v;
  v.note("a note");
  report.set_validation(v);
  std::string text = report.to_text();
  EXPECT_NE(text.find("command: demo"), std::string::npos);
  EXPECT_NE(text.find("seed: 42"), std::string::npos);
  EXPECT_NE(text.find("value = 0.500000000"), std::string::npos);
  // Structured output is valid JSON with the same content.
  std::string json = report.to_structured();
  EXPECT_EQ(json.front(), '{');
  EXPECT_NE(json.find("\"command\": \"demo\""), std::string::npos);
  EXPECT_EQ(report.to_text(), text);  // repeated rendering identical
  EXPECT_EQ(report.to_structured(), json);
}

}  // namespace
}  // namespace scop
