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
//
// scopwb — SCOP workbench CLI.
//
// Subcommands: validate | distance | collapse | petfish | chsh | quantum.
// Exit codes: 0 ok, 1 validation failure, 2 parse/usage error.

#include <cctype>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "scop/distances.hpp"
#include "scop/document.hpp"
#include "scop/errors.hpp"
#include "scop/hilbert.hpp"
#include "scop/nonclassicality.hpp"
#include "scop/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitUsage = 2;

struct Options {
  std::string file;
  std::string profiles;
  std::string format = "text";
  std::string measure;
  std::string state;
  std::string from;
  std::string context;
  std::vector<std::string> rows;
  std::size_t steps = 0;
  std::uint64_t seed = 0;
  std::size_t part = 0;
  double tolerance = 1e-10;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw scop::Error("cannot open file '" + path + "'");
  }
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// Reports echo only the basename: the digest pins the content, and golden
// files stay stable across checkout locations.
std::string display_name(const std::string& path) {
  auto slash = path.find_last_of('/');
  return slash == std::string::npos ? path : path.substr(slash + 1);
}

int emit(const scop::RunReport& report, const Options& opt, int code) {
  std::cout << (opt.format == "structured" ? report.to_structured()
                                           : report.to_text());
  return code;
}

struct LoadedFile {
  std::string bytes;
  scop::ScopDocument doc;
  scop::LoadedScop loaded;
};

LoadedFile load_scop_file(const std::string& path) {
  LoadedFile f;
  f.bytes = read_file(path);
  f.doc = scop::parse_scop_text(f.bytes);
  f.loaded = scop::load_scop_document(f.doc);
  return f;
}

// Commands other than `validate` refuse to act on invalid inputs.
std::optional<int> reject_invalid(const LoadedFile& f, const Options& opt,
                                  const char* command) {
  if (f.loaded.report.ok()) return std::nullopt;
  scop::RunReport report(command);
  report.add_input(display_name(opt.file), f.bytes);
  report.line("input rejected: validation failed");
  report.set_validation(f.loaded.report);
  return emit(report, opt, kExitValidation);
}

std::string couple_str(const scop::ScopRealization& s, scop::ContextId e,
                       scop::StateId p) {
  return "(" + s.context_label(e) + ", " + s.state_label(p) + ")";
}

int cmd_validate(const Options& opt) {
  LoadedFile f = load_scop_file(opt.file);
  scop::RunReport report("validate");
  report.add_input(display_name(opt.file), f.bytes);
  if (f.loaded.lattice) {
    report.kv("lattice elements", std::to_string(f.loaded.lattice->size()));
  }
  if (f.loaded.system) {
    report.kv("states", std::to_string(f.loaded.system->state_count()));
    report.kv("contexts", std::to_string(f.loaded.system->context_count()));
    report.kv("kernel rows",
              std::to_string(f.loaded.system->kernel().row_count()));
    report.kv("weight entries",
              std::to_string(f.loaded.system->weights().size()));
  }
  if (f.loaded.quantum) {
    report.kv("quantum dimension",
              std::to_string(f.loaded.quantum->dimension()));
    report.kv("quantum families",
              std::to_string(f.loaded.quantum->contexts().size()));
  }
  if (f.loaded.petfish) {
    report.line("petfish roles: resolved");
  }
  report.set_validation(f.loaded.report);
  return emit(report, opt, f.loaded.report.ok() ? kExitOk : kExitValidation);
}

// Resolves (context, state) against the tabular system first, then the
// quantum realization, so one command surface serves both.
const scop::ScopRealization* pick_realization(const scop::LoadedScop& loaded,
                                              const std::string& context,
                                              const std::string& state,
                                              scop::ContextId* e,
                                              scop::StateId* p) {
  if (loaded.system) {
    auto ce = loaded.system->find_context(context);
    auto sp = loaded.system->find_state(state);
    if (ce && sp) {
      *e = *ce;
      *p = *sp;
      return &*loaded.system;
    }
  }
  if (loaded.quantum) {
    auto ce = loaded.quantum->find_context(context);
    auto sp = loaded.quantum->find_state(state);
    if (ce && sp) {
      *e = *ce;
      *p = *sp;
      return loaded.quantum.get();
    }
  }
  return nullptr;
}

int cmd_collapse(const Options& opt) {
  LoadedFile f = load_scop_file(opt.file);
  if (auto rc = reject_invalid(f, opt, "collapse")) return *rc;

  scop::ContextId e;
  scop::StateId p;
  const scop::ScopRealization* real =
      pick_realization(f.loaded, opt.context, opt.state, &e, &p);
  if (!real) {
    std::cerr << "error: unknown couple (" << opt.context << ", " << opt.state
              << ")\n";
    return kExitUsage;
  }

  scop::RunReport report("collapse");
  report.add_input(display_name(opt.file), f.bytes);
  report.set_seed(opt.seed);
  report.kv("couple", couple_str(*real, e, p));

  try {
    report.kv("class",
              std::string(scop::to_string(scop::classify_couple(*real, e, p))));
    report.line("distribution:");
    for (const auto& t : real->transition_distribution(e, p)) {
      report.kv("  -> " + couple_str(*real, t.f, t.q), t.probability);
    }
    if (opt.steps > 0) {
      scop::SeededRandomSource rng(opt.seed);
      auto traj = scop::collapse_sequence(*real, e, p, opt.steps, rng);
      report.line("trajectory:");
      for (std::size_t i = 0; i < traj.couples.size(); ++i) {
        report.kv("  step " + std::to_string(i),
                  couple_str(*real, traj.couples[i].first,
                             traj.couples[i].second));
      }
      if (traj.truncated_at) {
        report.line("truncated: eigencouple reached at step " +
                    std::to_string(*traj.truncated_at));
      }
    }
  } catch (const scop::UnknownCoupleError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitUsage;
  }
  report.set_validation(f.loaded.report);
  return emit(report, opt, kExitOk);
}

int cmd_distance(const Options& opt) {
  scop::RunReport report("distance");
  report.line("measure: " + opt.measure);

  if (opt.measure == "dmu" || opt.measure == "theta") {
    if (opt.file.empty() || opt.state.empty() || opt.context.empty() ||
        opt.from.empty()) {
      std::cerr << "error: measure '" << opt.measure
                << "' needs --file, --state <q>, --context <e>, --from <p>\n";
      return kExitUsage;
    }
    LoadedFile f = load_scop_file(opt.file);
    if (auto rc = reject_invalid(f, opt, "distance")) return *rc;
    scop::ContextId e;
    scop::StateId p;
    const scop::ScopRealization* real =
        pick_realization(f.loaded, opt.context, opt.from, &e, &p);
    std::optional<scop::StateId> q =
        real ? real->find_state(opt.state) : std::nullopt;
    if (!real || !q) {
      std::cerr << "error: unknown identifier among (" << opt.state << ", "
                << opt.context << ", " << opt.from << ")\n";
      return kExitUsage;
    }
    report.add_input(display_name(opt.file), f.bytes);
    try {
      double mu = real->reduced_probability(*q, e, p);
      std::string args = real->state_label(*q) + " | " +
                         real->context_label(e) + ", " + real->state_label(p);
      report.kv("mu(" + args + ")", mu);
      if (opt.measure == "dmu") {
        report.kv("d_mu(" + args + ")", scop::d_mu_from_probability(mu));
      } else {
        report.kv("theta_mu(" + args + ")",
                  scop::theta_mu_from_probability(mu));
      }
    } catch (const scop::UnknownCoupleError& err) {
      std::cerr << "error: " << err.what() << "\n";
      return kExitUsage;
    }
    report.set_validation(f.loaded.report);
    return emit(report, opt, kExitOk);
  }

  // Profile-based measures.
  if (opt.profiles.empty()) {
    std::cerr << "error: measure '" << opt.measure << "' needs --profiles\n";
    return kExitUsage;
  }
  std::string bytes = read_file(opt.profiles);
  scop::ProfileTable table = scop::parse_profile_csv(bytes);
  report.add_input(display_name(opt.profiles), bytes);

  auto trim = [](std::string s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
      s.erase(s.begin());
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
      s.pop_back();
    return s;
  };
  auto row_profile =
      [&](const std::string& spec) -> std::pair<std::string,
                                                scop::FeatureProfile> {
    auto comma = spec.find(',');
    if (comma == std::string::npos) {
      throw scop::Error("row '" + spec + "' must be '<state>,<context>'");
    }
    std::string state = trim(spec.substr(0, comma));
    std::string context = trim(spec.substr(comma + 1));
    const auto* row = table.find(state, context);
    if (!row) {
      throw scop::Error("no profile row (" + state + ", " + context + ")");
    }
    return {"(" + state + ", " + context + ")", table.profile(*row)};
  };

  try {
    if (opt.measure == "dp" || opt.measure == "dw") {
      if (opt.rows.size() != 2) {
        std::cerr << "error: measure '" << opt.measure
                  << "' needs exactly two --row arguments\n";
        return kExitUsage;
      }
      auto [name_a, prof_a] = row_profile(opt.rows[0]);
      auto [name_b, prof_b] = row_profile(opt.rows[1]);
      scop::PropertyDistance d = opt.measure == "dp"
                                     ? scop::d_p(prof_a, prof_b)
                                     : scop::d_w(prof_a, prof_b);
      report.line("profile_a: " + name_a);
      report.line("profile_b: " + name_b);
      report.kv("features", std::to_string(d.feature_count));
      const std::string key = opt.measure == "dp" ? "d_p" : "d_w";
      report.kv(key, d.normalized);
      report.kv(key + "_raw", d.raw);
    } else if (opt.measure == "prototype") {
      if (opt.rows.size() != 2) {
        std::cerr << "error: measure 'prototype' needs two --row arguments "
                     "(stimulus, prototype)\n";
        return kExitUsage;
      }
      auto [name_s, prof_s] = row_profile(opt.rows[0]);
      auto [name_p, prof_p] = row_profile(opt.rows[1]);
      report.line("stimulus: " + name_s);
      report.line("prototype: " + name_p);
      report.kv("d_s", scop::prototype_distance(prof_s, prof_p));
    } else if (opt.measure == "exemplar") {
      if (opt.rows.size() < 2) {
        std::cerr << "error: measure 'exemplar' needs --row stimulus plus at "
                     "least one exemplar row\n";
        return kExitUsage;
      }
      auto [name_s, prof_s] = row_profile(opt.rows[0]);
      scop::ExemplarSet exemplars;
      for (std::size_t i = 1; i < opt.rows.size(); ++i) {
        auto [name, prof] = row_profile(opt.rows[i]);
        exemplars.exemplars.emplace_back(name, std::move(prof));
      }
      report.line("stimulus: " + name_s);
      report.kv("exemplars", std::to_string(exemplars.exemplars.size()));
      report.kv("d_s", scop::exemplar_distance(prof_s, exemplars));
    } else {
      std::cerr << "error: unknown measure '" << opt.measure << "'\n";
      return kExitUsage;
    }
  } catch (const scop::Error& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitUsage;
  }
  return emit(report, opt, kExitOk);
}

int cmd_petfish(const Options& opt) {
  LoadedFile f = load_scop_file(opt.file);
  if (auto rc = reject_invalid(f, opt, "petfish")) return *rc;

  scop::RunReport report("petfish");
  report.add_input(display_name(opt.file), f.bytes);

  if (!f.loaded.system || !f.loaded.petfish) {
    report.line("input rejected: [petfish] roles are not resolved");
    scop::ValidationReport v = f.loaded.report;
    v.add("petfish.structure", "file does not bind the Pet Fish roles");
    report.set_validation(v);
    return emit(report, opt, kExitValidation);
  }

  const scop::ScopSystem& sys = *f.loaded.system;
  const scop::PetfishRoles& roles = *f.loaded.petfish;

  try {
    struct MuRow {
      const char* name;
      scop::ContextId context;
    };
    const MuRow mu_rows[3] = {{"pet", roles.pet_context},
                              {"fish", roles.fish_context},
                              {"petfish", roles.petfish_context}};
    double d[3];
    for (int i = 0; i < 3; ++i) {
      double mu = sys.reduced_probability(roles.guppy_state,
                                          mu_rows[i].context,
                                          roles.before_state);
      d[i] = scop::d_mu_from_probability(mu);
      std::string args = sys.state_label(roles.guppy_state) + " | " +
                         sys.context_label(mu_rows[i].context) + ", " +
                         sys.state_label(roles.before_state);
      report.kv("mu(" + args + ")", mu);
    }
    for (int i = 0; i < 3; ++i) {
      std::string args = sys.state_label(roles.guppy_state) + ", " +
                         sys.context_label(mu_rows[i].context) + ", " +
                         sys.state_label(roles.before_state);
      report.kv("d_mu(" + args + ")", d[i]);
    }

    scop::FeatureProfile guppy_prof = scop::profile_from_weights(
        sys, roles.weight_pairs[0].first, roles.weight_pairs[0].second,
        roles.features);
    static const char* kNames[4] = {"guppy", "pet", "fish", "petfish"};
    for (int i = 1; i < 4; ++i) {
      scop::FeatureProfile prof = scop::profile_from_weights(
          sys, roles.weight_pairs[i].first, roles.weight_pairs[i].second,
          roles.features);
      scop::PropertyDistance dw = scop::d_w(guppy_prof, prof);
      report.kv("d_w(guppy, " + std::string(kNames[i]) + ")", dw.normalized);
      report.kv("d_w_raw(guppy, " + std::string(kNames[i]) + ")", dw.raw);
    }

    const bool effect = d[2] < d[0] && d[2] < d[1];
    report.line(effect ? "verdict: guppy effect present"
                       : "verdict: no guppy effect");
  } catch (const scop::Error& err) {
    scop::ValidationReport v = f.loaded.report;
    v.add("petfish.data", err.what());
    report.set_validation(v);
    return emit(report, opt, kExitValidation);
  }

  report.set_validation(f.loaded.report);
  return emit(report, opt, kExitOk);
}

int cmd_chsh(const Options& opt) {
  std::string bytes = read_file(opt.file);
  scop::CorrelationData data = scop::parse_correlation_text(bytes);

  scop::RunReport report("chsh");
  report.add_input(display_name(opt.file), bytes);

  scop::ValidationReport tables = data.validate();
  if (!tables.ok()) {
    report.line("input rejected: tables are not normalized distributions");
    report.set_validation(tables);
    return emit(report, opt, kExitValidation);
  }

  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      report.kv("E(A" + std::to_string(i + 1) + ",B" + std::to_string(j + 1) +
                    ")",
                data.tables[i][j].expectation());
    }
  }
  double s = scop::chsh_value(data);
  report.kv("S", s);
  report.line(std::abs(s) > 2.0
                  ? "verdict: nonclassical (|S| > 2, no Kolmogorovian model)"
                  : "verdict: |S| <= 2 (certifies nothing)");

  scop::FeasibilityResult fr = scop::kolmogorov_feasible(data);
  report.line(fr.feasible ? "kolmogorov: feasible" : "kolmogorov: infeasible");
  if (fr.feasible) {
    for (int sidx = 0; sidx < 16; ++sidx) {
      if (fr.weights[sidx] > 1e-12) {
        report.kv("  weight[" + scop::strategy_name(sidx) + "]",
                  fr.weights[sidx]);
      }
    }
    report.kv("witness max residual", fr.max_residual);
  } else {
    report.line(fr.violated_constraint);
  }
  report.set_validation(tables);
  return emit(report, opt, kExitOk);
}

int cmd_quantum(const Options& opt, const std::string& sub) {
  LoadedFile f = load_scop_file(opt.file);
  if (auto rc = reject_invalid(f, opt, "quantum")) return *rc;
  if (!f.loaded.quantum) {
    std::cerr << "error: file has no [quantum] section\n";
    return kExitUsage;
  }
  const scop::QuantumScop& q = *f.loaded.quantum;

  scop::RunReport report("quantum " + sub);
  report.add_input(display_name(opt.file), f.bytes);

  auto vector_text = [](const scop::HVector& v) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.dim(); ++i) {
      if (i) out += " ";
      out += "(" + scop::format_fixed9(v[i].real()) + "," +
             scop::format_fixed9(v[i].imag()) + ")";
    }
    return out + "]";
  };

  try {
    if (sub == "identity") {
      // The weight of each family part equals the collapse probability onto
      // it; checked over every named state.
      double max_dev = 0.0;
      std::size_t checked = 0;
      for (scop::StateId p : q.states()) {
        const scop::HVector& x = q.state_vector(p);
        for (scop::ContextId e : q.contexts()) {
          auto outcomes = scop::q_collapse(q.family(e), x);
          for (std::size_t part = 0; part < q.family(e).parts().size();
               ++part) {
            double w = scop::q_weight(x, q.family(e).parts()[part]);
            double prob = 0.0;
            for (const auto& o : outcomes) {
              if (o.part_index == part) prob = o.probability;
            }
            max_dev = std::max(max_dev, std::abs(w - prob));
            ++checked;
          }
        }
      }
      report.kv("checked (state,family,part) triples", std::to_string(checked));
      report.kv("max deviation", max_dev);
      std::ostringstream tol;
      tol << opt.tolerance;
      report.line(max_dev < opt.tolerance
                      ? "identity holds (max dev < " + tol.str() + ")"
                      : "identity FAILS at tolerance " + tol.str());
      report.set_validation(f.loaded.report);
      return emit(report, opt,
                  max_dev < opt.tolerance ? kExitOk : kExitValidation);
    }

    auto ps = q.find_state(opt.state);
    if (!ps) {
      std::cerr << "error: unknown quantum state '" << opt.state << "'\n";
      return kExitUsage;
    }
    const scop::HVector& x = q.state_vector(*ps);

    if (sub == "collapse") {
      auto pe = q.find_context(opt.context);
      if (!pe) {
        std::cerr << "error: unknown family '" << opt.context << "'\n";
        return kExitUsage;
      }
      report.kv("state", opt.state);
      report.kv("family", opt.context);
      auto outcomes = scop::q_collapse(q.family(*pe), x);
      auto entries = q.transition_distribution(*pe, *ps);
      for (std::size_t i = 0; i < outcomes.size(); ++i) {
        report.kv("outcome " + std::to_string(outcomes[i].part_index),
                  outcomes[i].probability);
        report.line("  collapsed -> " + q.state_label(entries[i].q) + " " +
                    vector_text(outcomes[i].state));
      }
    } else if (sub == "weight" || sub == "project") {
      auto pe = q.find_context(opt.context);
      if (!pe) {
        std::cerr << "error: unknown family '" << opt.context << "'\n";
        return kExitUsage;
      }
      if (opt.part >= q.family(*pe).parts().size()) {
        std::cerr << "error: family has no part " << opt.part << "\n";
        return kExitUsage;
      }
      const scop::Subspace& m = q.family(*pe).parts()[opt.part];
      std::string prop = opt.context + "[" + std::to_string(opt.part) + "]";
      if (sub == "weight") {
        report.kv("nu(" + opt.state + ", " + prop + ")", scop::q_weight(x, m));
      } else {
        scop::HVector y = scop::project(m, x);
        report.kv("P_" + prop + "(" + opt.state + ")", vector_text(y));
        report.kv("norm", scop::h_norm(y));
      }
    } else {
      std::cerr << "error: unknown quantum subcommand '" << sub << "'\n";
      return kExitUsage;
    }
  } catch (const scop::Error& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitUsage;
  }
  report.set_validation(f.loaded.report);
  return emit(report, opt, kExitOk);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"scopwb — State-Context-Property workbench"};
  app.require_subcommand(1);

  Options opt;

  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"text", "structured"}));
  };

  CLI::App* validate = app.add_subcommand("validate", "Validate a SCOP file");
  validate->add_option("--file", opt.file, "SCOP definition file")->required();
  add_format(validate);

  CLI::App* distance = app.add_subcommand("distance", "Distance measures");
  distance->add_option("--file", opt.file, "SCOP definition file");
  distance->add_option("--profiles", opt.profiles, "Feature-profile CSV");
  distance
      ->add_option("--measure", opt.measure,
                   "dmu | theta | dp | dw | prototype | exemplar")
      ->required()
      ->check(CLI::IsMember(
          {"dmu", "theta", "dp", "dw", "prototype", "exemplar"}));
  distance->add_option("--state", opt.state, "Target state q (dmu/theta)");
  distance->add_option("--from", opt.from, "Source state p (dmu/theta)");
  distance->add_option("--context", opt.context, "Context e (dmu/theta)");
  distance->add_option("--row", opt.rows,
                       "Profile row '<state>,<context>' (repeatable)");
  add_format(distance);

  CLI::App* collapse = app.add_subcommand("collapse", "Couple classification, "
                                                      "distribution, trajectory");
  collapse->add_option("--file", opt.file, "SCOP definition file")->required();
  collapse->add_option("--context", opt.context, "Context e")->required();
  collapse->add_option("--state", opt.state, "State p")->required();
  collapse->add_option("--steps", opt.steps, "Trajectory length");
  collapse->add_option("--seed", opt.seed, "RNG seed (mandatory: stochastic "
                                           "commands have no default seed)")
      ->required();
  add_format(collapse);

  CLI::App* petfish = app.add_subcommand("petfish", "Pet Fish analysis");
  petfish->add_option("--file", opt.file, "SCOP file with [petfish] roles")
      ->required();
  add_format(petfish);

  CLI::App* chsh = app.add_subcommand("chsh", "CHSH value and Kolmogorovian "
                                              "feasibility");
  chsh->add_option("--file", opt.file, "Correlation data file")->required();
  add_format(chsh);

  CLI::App* quantum = app.add_subcommand("quantum", "Hilbert-space operations");
  quantum->require_subcommand(1);
  std::vector<std::pair<const char*, const char*>> qsubs = {
      {"collapse", "Collapse table for (family, state)"},
      {"weight", "Subspace weight nu(x, M)"},
      {"project", "Projection onto a family part"},
      {"identity", "Weight vs collapse-probability identity check"}};
  for (auto& [name, help] : qsubs) {
    CLI::App* sub = quantum->add_subcommand(name, help);
    sub->add_option("--file", opt.file, "SCOP file with [quantum] section")
        ->required();
    if (std::string(name) != "identity") {
      sub->add_option("--state", opt.state, "Named vector")->required();
    }
    if (std::string(name) == "collapse" || std::string(name) == "weight" ||
        std::string(name) == "project") {
      sub->add_option("--context", opt.context, "Family label")->required();
    }
    if (std::string(name) == "weight" || std::string(name) == "project") {
      sub->add_option("--part", opt.part, "Family part index")->required();
    }
    if (std::string(name) == "identity") {
      sub->add_option("--tolerance", opt.tolerance, "Identity tolerance");
    }
    add_format(sub);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (validate->parsed()) return cmd_validate(opt);
    if (distance->parsed()) return cmd_distance(opt);
    if (collapse->parsed()) return cmd_collapse(opt);
    if (petfish->parsed()) return cmd_petfish(opt);
    if (chsh->parsed()) return cmd_chsh(opt);
    if (quantum->parsed()) {
      for (auto& [name, help] : qsubs) {
        if (quantum->get_subcommand(name)->parsed()) {
          return cmd_quantum(opt, name);
        }
      }
    }
  } catch (const scop::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const scop::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
