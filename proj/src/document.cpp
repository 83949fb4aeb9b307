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

#include <cctype>
#include <charconv>
#include <cstdio>
#include <sstream>

#include "scop/errors.hpp"

namespace scop {

namespace {

struct Token {
  std::string text;
  int line;
  int column;
};

// Splits a line into whitespace-separated tokens; '#' starts a comment.
std::vector<Token> tokenize_line(std::string_view line, int line_no) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '#') break;
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) &&
           line[i] != '#') {
      ++i;
    }
    tokens.push_back({std::string(line.substr(start, i - start)), line_no,
                      static_cast<int>(start) + 1});
  }
  return tokens;
}

std::vector<std::vector<Token>> tokenize(std::string_view text) {
  std::vector<std::vector<Token>> lines;
  int line_no = 1;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    std::string_view line = end == std::string_view::npos
                                ? text.substr(pos)
                                : text.substr(pos, end - pos);
    auto tokens = tokenize_line(line, line_no);
    if (!tokens.empty()) lines.push_back(std::move(tokens));
    if (end == std::string_view::npos) break;
    pos = end + 1;
    ++line_no;
  }
  return lines;
}

double parse_number(const Token& t) {
  double value = 0.0;
  const char* begin = t.text.data();
  const char* end = begin + t.text.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end) {
    throw ParseError("expected a number, got '" + t.text + "'", t.line,
                     t.column);
  }
  return value;
}

std::size_t parse_count(const Token& t) {
  std::size_t value = 0;
  const char* begin = t.text.data();
  const char* end = begin + t.text.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end) {
    throw ParseError("expected a count, got '" + t.text + "'", t.line,
                     t.column);
  }
  return value;
}

void require_arity(const std::vector<Token>& tokens, std::size_t n,
                   const char* form) {
  if (tokens.size() != n) {
    throw ParseError("record '" + tokens[0].text + "' expects the form '" +
                         form + "'",
                     tokens[0].line, tokens[0].column);
  }
}

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

ScopDocument parse_scop_text(std::string_view text) {
  ScopDocument doc;
  enum class Section {
    None,
    Lattice,
    States,
    Contexts,
    Kernel,
    Weights,
    Quantum,
    Petfish
  };
  Section section = Section::None;

  for (const auto& tokens : tokenize(text)) {
    const Token& head = tokens.front();
    if (head.text.front() == '[') {
      if (tokens.size() != 1 || head.text.back() != ']') {
        throw ParseError("malformed section header", head.line, head.column);
      }
      std::string name = head.text.substr(1, head.text.size() - 2);
      if (name == "lattice") {
        section = Section::Lattice;
        doc.has_lattice = true;
      } else if (name == "states") {
        section = Section::States;
      } else if (name == "contexts") {
        section = Section::Contexts;
      } else if (name == "kernel") {
        section = Section::Kernel;
      } else if (name == "weights") {
        section = Section::Weights;
      } else if (name == "quantum") {
        section = Section::Quantum;
        doc.has_quantum = true;
      } else if (name == "petfish") {
        section = Section::Petfish;
        doc.has_petfish = true;
        doc.petfish.line = head.line;
      } else {
        throw ParseError("unknown section '[" + name + "]'", head.line,
                         head.column);
      }
      continue;
    }

    const std::string& kw = head.text;
    switch (section) {
      case Section::None:
        throw ParseError("record outside any section", head.line, head.column);

      case Section::Lattice:
        if (kw == "element") {
          require_arity(tokens, 2, "element <id>");
          doc.lattice.elements.push_back(tokens[1].text);
        } else if (kw == "order") {
          require_arity(tokens, 3, "order <a> <b>");
          doc.lattice.order.emplace_back(tokens[1].text, tokens[2].text);
        } else if (kw == "complement") {
          require_arity(tokens, 3, "complement <a> <b>");
          doc.lattice.complements.emplace_back(tokens[1].text, tokens[2].text);
        } else if (kw == "bottom") {
          require_arity(tokens, 2, "bottom <id>");
          doc.lattice.bottom = tokens[1].text;
        } else if (kw == "top") {
          require_arity(tokens, 2, "top <id>");
          doc.lattice.top = tokens[1].text;
        } else {
          throw ParseError("unknown lattice record '" + kw + "'", head.line,
                           head.column);
        }
        break;

      case Section::States:
        if (kw != "state") {
          throw ParseError("unknown states record '" + kw + "'", head.line,
                           head.column);
        }
        require_arity(tokens, 2, "state <id>");
        doc.states.emplace_back(tokens[1].text, head.line);
        break;

      case Section::Contexts:
        if (kw != "context") {
          throw ParseError("unknown contexts record '" + kw + "'", head.line,
                           head.column);
        }
        require_arity(tokens, 2, "context <id>");
        doc.contexts.emplace_back(tokens[1].text, head.line);
        break;

      case Section::Kernel:
        if (kw != "mu") {
          throw ParseError("unknown kernel record '" + kw + "'", head.line,
                           head.column);
        }
        require_arity(tokens, 6, "mu <e> <p> <f> <q> <prob>");
        doc.kernel.push_back({tokens[1].text, tokens[2].text, tokens[3].text,
                              tokens[4].text, parse_number(tokens[5]),
                              head.line});
        break;

      case Section::Weights:
        if (kw != "nu") {
          throw ParseError("unknown weights record '" + kw + "'", head.line,
                           head.column);
        }
        require_arity(tokens, 5, "nu <p> <e> <a> <w>");
        doc.weights.push_back({tokens[1].text, tokens[2].text, tokens[3].text,
                               parse_number(tokens[4]), head.line});
        break;

      case Section::Quantum:
        if (kw == "dimension") {
          require_arity(tokens, 2, "dimension <n>");
          doc.quantum.dimension = parse_count(tokens[1]);
          doc.quantum.dimension_line = head.line;
        } else if (kw == "vector") {
          if (tokens.size() < 4 || tokens.size() % 2 != 0) {
            throw ParseError(
                "record 'vector' expects the form 'vector <id> <re> <im> ...'",
                head.line, head.column);
          }
          ScopDocument::QuantumSection::VectorRecord rec;
          rec.label = tokens[1].text;
          rec.line = head.line;
          for (std::size_t i = 2; i + 1 < tokens.size(); i += 2) {
            rec.components.emplace_back(parse_number(tokens[i]),
                                        parse_number(tokens[i + 1]));
          }
          doc.quantum.vectors.push_back(std::move(rec));
        } else if (kw == "family") {
          // family <id> <v>... | <v>... | ...
          if (tokens.size() < 3) {
            throw ParseError(
                "record 'family' expects the form 'family <id> <v>... | ...'",
                head.line, head.column);
          }
          ScopDocument::QuantumSection::FamilyRecord rec;
          rec.label = tokens[1].text;
          rec.line = head.line;
          rec.parts.emplace_back();
          for (std::size_t i = 2; i < tokens.size(); ++i) {
            if (tokens[i].text == "|") {
              if (rec.parts.back().empty()) {
                throw ParseError("empty family part", tokens[i].line,
                                 tokens[i].column);
              }
              rec.parts.emplace_back();
            } else {
              rec.parts.back().push_back(tokens[i].text);
            }
          }
          if (rec.parts.back().empty()) {
            throw ParseError("empty family part", head.line, head.column);
          }
          doc.quantum.families.push_back(std::move(rec));
        } else {
          throw ParseError("unknown quantum record '" + kw + "'", head.line,
                           head.column);
        }
        break;

      case Section::Petfish: {
        auto& pf = doc.petfish;
        if (kw == "before_state") {
          require_arity(tokens, 2, "before_state <state>");
          pf.before_state = tokens[1].text;
        } else if (kw == "guppy_state") {
          require_arity(tokens, 2, "guppy_state <state>");
          pf.guppy_state = tokens[1].text;
        } else if (kw == "pet_context") {
          require_arity(tokens, 2, "pet_context <context>");
          pf.pet_context = tokens[1].text;
        } else if (kw == "fish_context") {
          require_arity(tokens, 2, "fish_context <context>");
          pf.fish_context = tokens[1].text;
        } else if (kw == "petfish_context") {
          require_arity(tokens, 2, "petfish_context <context>");
          pf.petfish_context = tokens[1].text;
        } else if (kw == "features") {
          if (tokens.size() < 2) {
            throw ParseError("record 'features' lists at least one feature",
                             head.line, head.column);
          }
          for (std::size_t i = 1; i < tokens.size(); ++i) {
            pf.features.push_back(tokens[i].text);
          }
        } else if (kw == "guppy_weights" || kw == "pet_weights" ||
                   kw == "fish_weights" || kw == "petfish_weights") {
          require_arity(tokens, 3, "<role>_weights <state> <context>");
          int idx = kw == "guppy_weights"  ? 0
                    : kw == "pet_weights"  ? 1
                    : kw == "fish_weights" ? 2
                                           : 3;
          pf.weight_pairs[idx] = {tokens[1].text, tokens[2].text};
        } else {
          throw ParseError("unknown petfish record '" + kw + "'", head.line,
                           head.column);
        }
        break;
      }
    }
  }
  return doc;
}

LoadedScop load_scop_document(const ScopDocument& doc, double eps_norm) {
  LoadedScop out;
  auto& report = out.report;

  if (doc.has_lattice) {
    try {
      auto lattice = std::make_shared<PropertyLattice>(
          PropertyLattice::from_definition(doc.lattice));
      report.merge(lattice->validate());
      out.lattice = std::move(lattice);
    } catch (const Error& e) {
      report.add("document.lattice", e.what());
    }
  }

  const bool wants_system = !doc.states.empty() || !doc.contexts.empty() ||
                            !doc.kernel.empty() || !doc.weights.empty();
  if (wants_system && !out.lattice) {
    report.add("document.structure",
               "states/kernel/weights sections require a valid [lattice]");
  }

  if (wants_system && out.lattice) {
    ScopSystem system(out.lattice);
    for (const auto& [label, line] : doc.states) {
      try {
        system.add_state(label);
      } catch (const Error& e) {
        report.add("document.states",
                   std::string(e.what()) + " (line " + std::to_string(line) +
                       ")");
      }
    }
    for (const auto& [label, line] : doc.contexts) {
      try {
        system.add_context(label);
      } catch (const Error& e) {
        report.add("document.contexts",
                   std::string(e.what()) + " (line " + std::to_string(line) +
                       ")");
      }
    }
    for (const auto& rec : doc.kernel) {
      auto e = system.find_context(rec.e);
      auto p = system.find_state(rec.p);
      auto f = system.find_context(rec.f);
      auto q = system.find_state(rec.q);
      if (!e || !p || !f || !q) {
        report.add("document.kernel", "kernel entry references unknown ids "
                                      "(line " +
                                          std::to_string(rec.line) + ")");
        continue;
      }
      try {
        system.set_transition(*e, *p, *f, *q, rec.probability);
      } catch (const Error& err) {
        report.add("document.kernel", std::string(err.what()) + " (line " +
                                          std::to_string(rec.line) + ")");
      }
    }
    for (const auto& rec : doc.weights) {
      auto p = system.find_state(rec.p);
      auto e = system.find_context(rec.e);
      auto a = system.find_property(rec.a);
      if (!p || !e || !a) {
        report.add("document.weights", "weight entry references unknown ids "
                                       "(line " +
                                           std::to_string(rec.line) + ")");
        continue;
      }
      try {
        system.set_weight(*p, *e, *a, rec.weight);
      } catch (const Error& err) {
        report.add("document.weights", std::string(err.what()) + " (line " +
                                           std::to_string(rec.line) + ")");
      }
    }
    report.merge(system.validate(eps_norm));
    out.system.emplace(std::move(system));
  }

  if (doc.has_quantum) {
    const auto& q = doc.quantum;
    if (q.dimension == 0 || q.dimension > kMaxDimension) {
      report.add("document.quantum",
                 "dimension must be in [1, " + std::to_string(kMaxDimension) +
                     "] (line " + std::to_string(q.dimension_line) + ")");
    } else {
      auto quantum = std::make_shared<QuantumScop>(q.dimension);
      for (const auto& rec : q.vectors) {
        try {
          if (rec.components.size() != q.dimension) {
            throw DimensionMismatchError(
                "vector '" + rec.label + "' has " +
                std::to_string(rec.components.size()) + " components, space "
                "has dimension " + std::to_string(q.dimension));
          }
          quantum->add_state(rec.label, HVector(rec.components));
        } catch (const Error& e) {
          report.add("document.quantum", std::string(e.what()) + " (line " +
                                             std::to_string(rec.line) + ")");
        }
      }
      for (const auto& rec : q.families) {
        try {
          std::vector<Subspace> parts;
          for (const auto& part : rec.parts) {
            std::vector<HVector> gens;
            for (const auto& label : part) {
              auto id = quantum->find_state(label);
              if (!id) {
                throw UnknownIdError("family '" + rec.label +
                                     "' references unknown vector '" + label +
                                     "'");
              }
              gens.push_back(quantum->state_vector(*id));
            }
            parts.push_back(Subspace::span(gens));
          }
          SpectralFamily family(std::move(parts));
          report.merge(family.validate());
          quantum->add_family(rec.label, std::move(family));
        } catch (const Error& e) {
          report.add("document.quantum", std::string(e.what()) + " (line " +
                                             std::to_string(rec.line) + ")");
        }
      }
      out.quantum = std::move(quantum);
    }
  }

  if (doc.has_petfish) {
    if (!out.system) {
      report.add("petfish.structure",
                 "[petfish] requires the tabular sections to load");
    } else {
      const auto& pf = doc.petfish;
      PetfishRoles roles;
      bool ok = true;
      auto need_state = [&](const std::string& label, const char* role,
                            StateId* into) {
        if (label.empty()) {
          report.add("petfish.role", std::string("missing record '") + role +
                                         "' in [petfish]");
          ok = false;
          return;
        }
        auto id = out.system->find_state(label);
        if (!id) {
          report.add("petfish.role", std::string(role) + " '" + label +
                                         "' is not a registered state");
          ok = false;
          return;
        }
        *into = *id;
      };
      auto need_context = [&](const std::string& label, const char* role,
                              ContextId* into) {
        if (label.empty()) {
          report.add("petfish.role", std::string("missing record '") + role +
                                         "' in [petfish]");
          ok = false;
          return;
        }
        auto id = out.system->find_context(label);
        if (!id) {
          report.add("petfish.role", std::string(role) + " '" + label +
                                         "' is not a registered context");
          ok = false;
          return;
        }
        *into = *id;
      };

      need_state(pf.before_state, "before_state", &roles.before_state);
      need_state(pf.guppy_state, "guppy_state", &roles.guppy_state);
      need_context(pf.pet_context, "pet_context", &roles.pet_context);
      need_context(pf.fish_context, "fish_context", &roles.fish_context);
      need_context(pf.petfish_context, "petfish_context",
                   &roles.petfish_context);

      if (pf.features.empty()) {
        report.add("petfish.role", "missing record 'features' in [petfish]");
        ok = false;
      }
      for (const auto& f : pf.features) {
        auto id = out.system->find_property(f);
        if (!id) {
          report.add("petfish.role",
                     "feature '" + f + "' is not a lattice element");
          ok = false;
          continue;
        }
        roles.features.push_back(*id);
      }
      static const char* kPairNames[4] = {"guppy_weights", "pet_weights",
                                          "fish_weights", "petfish_weights"};
      for (int i = 0; i < 4; ++i) {
        StateId s;
        ContextId c;
        need_state(pf.weight_pairs[i].first, kPairNames[i], &s);
        need_context(pf.weight_pairs[i].second, kPairNames[i], &c);
        roles.weight_pairs[i] = {s, c};
      }
      if (ok) out.petfish = std::move(roles);
    }
  }

  return out;
}

std::string serialize(const ScopSystem& system) {
  std::ostringstream os;
  const PropertyLattice& lattice = system.lattice();

  os << "[lattice]\n";
  for (PropertyId a : lattice.all_elements()) {
    os << "element " << lattice.label(a) << "\n";
  }
  for (PropertyId a : lattice.all_elements()) {
    for (PropertyId b : lattice.all_elements()) {
      if (a != b && lattice.leq(a, b)) {
        os << "order " << lattice.label(a) << " " << lattice.label(b) << "\n";
      }
    }
  }
  for (PropertyId a : lattice.all_elements()) {
    os << "complement " << lattice.label(a) << " "
       << lattice.label(lattice.complement_of(a)) << "\n";
  }
  os << "bottom " << lattice.label(lattice.bottom()) << "\n";
  os << "top " << lattice.label(lattice.top()) << "\n";

  os << "\n[states]\n";
  for (StateId p : system.states()) {
    os << "state " << system.state_label(p) << "\n";
  }
  os << "\n[contexts]\n";
  for (ContextId e : system.contexts()) {
    os << "context " << system.context_label(e) << "\n";
  }

  os << "\n[kernel]\n";
  for (const auto& [key, row] : system.kernel().rows()) {
    for (const auto& t : row) {
      os << "mu " << system.context_label(ContextId(key.first)) << " "
         << system.state_label(StateId(key.second)) << " "
         << system.context_label(t.f) << " " << system.state_label(t.q) << " "
         << fmt17(t.probability) << "\n";
    }
  }

  os << "\n[weights]\n";
  for (const auto& [key, w] : system.weights().entries()) {
    auto [pi, ei, ai] = key;
    os << "nu " << system.state_label(StateId(pi)) << " "
       << system.context_label(ContextId(ei)) << " "
       << system.property_label(PropertyId(ai)) << " " << fmt17(w) << "\n";
  }
  return os.str();
}

const ProfileTable::Row* ProfileTable::find(std::string_view state,
                                            std::string_view context) const {
  for (const auto& row : rows) {
    if (row.state == state && row.context == context) return &row;
  }
  return nullptr;
}

FeatureProfile ProfileTable::profile(const Row& row) const {
  return FeatureProfile(features, row.values);
}

ProfileTable parse_profile_csv(std::string_view text) {
  ProfileTable table;
  int line_no = 0;
  std::size_t pos = 0;
  bool header_seen = false;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    std::string_view line = end == std::string_view::npos
                                ? text.substr(pos)
                                : text.substr(pos, end - pos);
    ++line_no;

    // Split on commas, trimming surrounding spaces.
    std::vector<std::string> cells;
    std::size_t cell_start = 0;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty()) {
      for (std::size_t i = 0; i <= line.size(); ++i) {
        if (i == line.size() || line[i] == ',') {
          std::string_view cell = line.substr(cell_start, i - cell_start);
          while (!cell.empty() && std::isspace((unsigned char)cell.front()))
            cell.remove_prefix(1);
          while (!cell.empty() && std::isspace((unsigned char)cell.back()))
            cell.remove_suffix(1);
          cells.emplace_back(cell);
          cell_start = i + 1;
        }
      }
      if (!(cells.size() == 1 && cells[0].empty())) {
        if (!header_seen) {
          if (cells.size() < 3 || cells[0] != "state" || cells[1] != "context") {
            throw ParseError(
                "profile CSV header must be 'state,context,<feature>...'",
                line_no, 1);
          }
          table.features.assign(cells.begin() + 2, cells.end());
          header_seen = true;
        } else {
          if (cells.size() != table.features.size() + 2) {
            throw ParseError("profile row has " + std::to_string(cells.size()) +
                                 " cells, expected " +
                                 std::to_string(table.features.size() + 2),
                             line_no, 1);
          }
          ProfileTable::Row row;
          row.state = cells[0];
          row.context = cells[1];
          for (std::size_t i = 2; i < cells.size(); ++i) {
            double v = 0.0;
            const char* b = cells[i].data();
            auto [ptr, ec] = std::from_chars(b, b + cells[i].size(), v);
            if (ec != std::errc() || ptr != b + cells[i].size()) {
              throw ParseError("expected a number, got '" + cells[i] + "'",
                               line_no, 1);
            }
            row.values.push_back(v);
          }
          table.rows.push_back(std::move(row));
        }
      }
    }
    if (end == std::string_view::npos) break;
    pos = end + 1;
  }
  if (!header_seen) {
    throw ParseError("profile CSV is empty", 1, 1);
  }
  return table;
}

CorrelationData parse_correlation_text(std::string_view text) {
  std::vector<Token> stream;
  for (const auto& line : tokenize(text)) {
    stream.insert(stream.end(), line.begin(), line.end());
  }

  CorrelationData data;
  bool seen[2][2] = {{false, false}, {false, false}};
  std::size_t i = 0;
  while (i < stream.size()) {
    const Token& t = stream[i];
    if (t.text != "table") {
      throw ParseError("expected 'table', got '" + t.text + "'", t.line,
                       t.column);
    }
    if (i + 6 >= stream.size()) {
      throw ParseError("truncated table block", t.line, t.column);
    }
    auto setting = [&](const Token& tok, char party) -> int {
      if (tok.text.size() == 2 && tok.text[0] == party &&
          (tok.text[1] == '1' || tok.text[1] == '2')) {
        return tok.text[1] - '1';
      }
      throw ParseError(std::string("expected setting ") + party + "1 or " +
                           party + "2, got '" + tok.text + "'",
                       tok.line, tok.column);
    };
    int ai = setting(stream[i + 1], 'A');
    int bj = setting(stream[i + 2], 'B');
    if (seen[ai][bj]) {
      throw ParseError("duplicate table", stream[i + 1].line,
                       stream[i + 1].column);
    }
    seen[ai][bj] = true;
    data.tables[ai][bj].p[0][0] = parse_number(stream[i + 3]);
    data.tables[ai][bj].p[0][1] = parse_number(stream[i + 4]);
    data.tables[ai][bj].p[1][0] = parse_number(stream[i + 5]);
    data.tables[ai][bj].p[1][1] = parse_number(stream[i + 6]);
    i += 7;
  }
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      if (!seen[a][b]) {
        throw ParseError("missing table A" + std::to_string(a + 1) + "B" +
                             std::to_string(b + 1),
                         1, 1);
      }
    }
  }
  return data;
}

std::string serialize(const CorrelationData& data) {
  std::ostringstream os;
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      os << "table A" << (a + 1) << " B" << (b + 1) << "\n";
      os << fmt17(data.tables[a][b].p[0][0]) << " "
         << fmt17(data.tables[a][b].p[0][1]) << "\n";
      os << fmt17(data.tables[a][b].p[1][0]) << " "
         << fmt17(data.tables[a][b].p[1][1]) << "\n";
    }
  }
  return os.str();
}

}  // namespace scop
