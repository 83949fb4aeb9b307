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
// Acceptance suite. Runs every criterion at its stated tolerance and prints
// one pass/fail line per criterion; exit code is the number of failures.

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "scop/distances.hpp"
#include "scop/document.hpp"
#include "scop/errors.hpp"
#include "scop/hilbert.hpp"
#include "scop/lattice.hpp"
#include "scop/nonclassicality.hpp"
#include "scop/report.hpp"
#include "support/test_helpers.hpp"

namespace {

const double kPi = std::acos(-1.0);

struct Criterion {
  int number;
  std::string description;
  std::function<bool(std::string&)> run;  // fills a failure note
};

std::string read_all(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string data(const std::string& name) {
  return std::string(SCOPWB_DATA_DIR) + "/" + name;
}

struct CliResult {
  int exit_code;
  std::string out;
};

CliResult run_cli(const std::string& args) {
  static int counter = 0;
  std::string out_path = "/tmp/scop_acceptance_" + std::to_string(counter++) +
                         ".out";
  std::string command = std::string(SCOPWB_BINARY) + " " + args + " > " +
                        out_path + " 2> /dev/null";
  int status = std::system(command.c_str());
  CliResult r{WEXITSTATUS(status), read_all(out_path)};
  std::remove(out_path.c_str());
  return r;
}

bool within_time(std::chrono::steady_clock::time_point start, double seconds,
                 std::string& note) {
  double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  if (elapsed > seconds) {
    note += " [runtime " + std::to_string(elapsed) + "s exceeds " +
            std::to_string(seconds) + "s]";
    return false;
  }
  return true;
}

// Criterion 1: d_mu / theta_mu boundary cases, tolerance 1e-12, < 1s.
bool criterion1(std::string& note) {
  auto start = std::chrono::steady_clock::now();
  bool ok = true;
  if (std::abs(scop::d_mu_from_probability(0.0) - std::sqrt(2.0)) > 1e-12) {
    note += " d_mu(0) != sqrt(2);";
    ok = false;
  }
  if (std::abs(scop::theta_mu_from_probability(0.0) - kPi / 2) > 1e-12) {
    note += " theta(0) != pi/2;";
    ok = false;
  }
  if (std::abs(scop::d_mu_from_probability(1.0)) > 1e-12) {
    note += " d_mu(1) != 0;";
    ok = false;
  }
  if (std::abs(scop::theta_mu_from_probability(1.0)) > 1e-12) {
    note += " theta(1) != 0;";
    ok = false;
  }
  return ok && within_time(start, 1.0, note);
}

// Criterion 2: weight/collapse-probability identity over >= 1000 random
// (unit vector, spectral family) instances in dims 2..8, max dev < 1e-10,
// < 10s.
bool criterion2(std::string& note) {
  auto start = std::chrono::steady_clock::now();
  std::mt19937_64 rng(20260810);
  double max_dev = 0.0;
  int instances = 0;
  while (instances < 1000) {
    std::size_t dim = 2 + instances % 7;
    auto family = scop::testing::random_spectral_family(dim, rng);
    auto x = scop::testing::random_unit_vector(dim, rng);
    auto outcomes = scop::q_collapse(family, x);
    for (std::size_t part = 0; part < family.parts().size(); ++part) {
      double w = scop::q_weight(x, family.parts()[part]);
      double prob = 0.0;
      for (const auto& o : outcomes) {
        if (o.part_index == part) prob = o.probability;
      }
      max_dev = std::max(max_dev, std::abs(w - prob));
    }
    ++instances;
  }
  std::ostringstream os;
  os << " max dev " << max_dev << " over " << instances << " instances";
  note += os.str();
  return max_dev < 1e-10 && within_time(start, 10.0, note);
}

// Criterion 3: Hilbert distance vs d_mu agreement over >= 1000 unit pairs
// with real nonnegative inner product, < 1e-10.
bool criterion3(std::string& note) {
  std::mt19937_64 rng(314159);
  double max_dev = 0.0;
  int pairs = 0;
  while (pairs < 1000) {
    std::size_t dim = 2 + pairs % 7;
    auto x = scop::testing::random_unit_vector(dim, rng);
    auto y = scop::testing::random_unit_vector(dim, rng);
    scop::Complex ip = scop::inner(x, y);
    if (std::abs(ip) < 1e-12) continue;
    y *= std::conj(ip) / std::abs(ip);
    double mu = std::min(1.0, std::norm(scop::inner(x, y)));
    max_dev = std::max(max_dev, std::abs(scop::h_distance(x, y) -
                                         scop::d_mu_from_probability(mu)));
    ++pairs;
  }
  std::ostringstream os;
  os << " max dev " << max_dev;
  note += os.str();
  return max_dev < 1e-10;
}

// Criterion 4: powerset lattices (<= 5 atoms) validate clean; all six
// mutation classes detected with witnesses; < 5s.
bool criterion4(std::string& note) {
  auto start = std::chrono::steady_clock::now();
  bool ok = true;
  std::vector<std::string> atoms;
  for (int n = 0; n <= 5; ++n) {
    if (n > 0) atoms.push_back(std::string(1, static_cast<char>('a' + n - 1)));
    auto report = scop::PropertyLattice::powerset(atoms).validate();
    if (!report.ok()) {
      note += " powerset(" + std::to_string(n) + ") not clean;";
      ok = false;
    }
  }

  struct Mutant {
    const char* rule;
    scop::LatticeDefinition def;
  };
  std::vector<Mutant> mutants;
  {
    scop::LatticeDefinition def;  // broken involution
    def.elements = {"0", "x", "y", "I"};
    def.order = {{"0", "x"}, {"0", "y"}, {"x", "I"}, {"y", "I"}};
    def.complements = {{"0", "I"}, {"I", "0"}, {"x", "y"}, {"y", "I"}};
    def.bottom = "0";
    def.top = "I";
    mutants.push_back({"ortho.involution", def});
  }
  {
    scop::LatticeDefinition def;  // broken order reversal
    def.elements = {"0", "a", "b", "c", "I"};
    def.order = {{"0", "a"}, {"a", "b"}, {"b", "I"}, {"0", "c"}, {"c", "I"}};
    def.complements = {
        {"0", "I"}, {"I", "0"}, {"a", "c"}, {"c", "a"}, {"b", "b"}};
    def.bottom = "0";
    def.top = "I";
    mutants.push_back({"ortho.order-reversal", def});
  }
  {
    scop::LatticeDefinition def;  // a AND a' != 0
    def.elements = {"{}", "{x}", "{y}", "{x,y}"};
    def.order = {{"{}", "{x}"}, {"{}", "{y}"}, {"{x}", "{x,y}"},
                 {"{y}", "{x,y}"}};
    def.complements = {{"{}", "{x,y}"}, {"{x,y}", "{}"}, {"{x}", "{x,y}"},
                       {"{y}", "{x}"}};
    def.bottom = "{}";
    def.top = "{x,y}";
    mutants.push_back({"ortho.meet-zero", def});
  }
  {
    scop::LatticeDefinition def;  // a OR a' != I
    def.elements = {"0", "a", "b", "I"};
    def.order = {{"0", "a"}, {"a", "b"}, {"b", "I"}};
    def.complements = {{"0", "I"}, {"I", "0"}, {"a", "b"}, {"b", "a"}};
    def.bottom = "0";
    def.top = "I";
    mutants.push_back({"ortho.join-one", def});
  }
  {
    scop::LatticeDefinition def;  // missing infimum (bowtie)
    def.elements = {"0", "x", "y", "a", "b", "I"};
    def.order = {{"0", "x"}, {"0", "y"}, {"x", "a"}, {"x", "b"},
                 {"y", "a"}, {"y", "b"}, {"a", "I"}, {"b", "I"}};
    def.complements = {{"0", "I"}, {"I", "0"}, {"x", "a"}, {"a", "x"},
                       {"y", "b"}, {"b", "y"}};
    def.bottom = "0";
    def.top = "I";
    mutants.push_back({"lattice.no-infimum", def});
  }
  {
    scop::LatticeDefinition def;  // broken antisymmetry
    def.elements = {"0", "a", "b", "I"};
    def.order = {{"0", "a"}, {"0", "b"}, {"a", "b"}, {"b", "a"},
                 {"a", "I"}, {"b", "I"}};
    def.complements = {{"0", "I"}, {"I", "0"}, {"a", "b"}, {"b", "a"}};
    def.bottom = "0";
    def.top = "I";
    mutants.push_back({"order.antisymmetry", def});
  }

  for (const auto& m : mutants) {
    auto report = scop::PropertyLattice::from_definition(m.def).validate();
    bool found = false;
    for (const auto& v : report.violations) {
      if (v.rule == m.rule && !v.detail.empty()) found = true;
    }
    if (!found) {
      note += std::string(" class ") + m.rule + " not detected;";
      ok = false;
    }
  }
  return ok && within_time(start, 5.0, note);
}

// Criterion 5: bundled fixtures satisfy the normalization invariants at
// 1e-9; mutated fixtures are rejected.
bool criterion5(std::string& note) {
  bool ok = true;
  for (const char* name : {"petfish.scop", "quantum_demo.scop"}) {
    std::string text = read_all(data(name));
    if (text.empty()) {
      note += std::string(" missing fixture ") + name + ";";
      ok = false;
      continue;
    }
    auto loaded =
        scop::load_scop_document(scop::parse_scop_text(text), 1e-9);
    if (!loaded.report.ok()) {
      note += std::string(" ") + name + " fails strict validation;";
      ok = false;
    }
  }
  // Mutations: a kernel probability and a weight, each breaking a sum.
  std::string text = read_all(data("petfish.scop"));
  for (auto [from, to] : std::vector<std::pair<std::string, std::string>>{
           {"mu ask_pet p0 ask_pet guppy 0.05",
            "mu ask_pet p0 ask_pet guppy 0.06"},
           {"nu guppy rate_guppy not_swims 0.05",
            "nu guppy rate_guppy not_swims 0.15"}}) {
    std::string mutated = text;
    auto pos = mutated.find(from);
    if (pos == std::string::npos) {
      note += " mutation anchor missing;";
      ok = false;
      continue;
    }
    mutated.replace(pos, from.size(), to);
    auto loaded = scop::load_scop_document(scop::parse_scop_text(mutated));
    if (loaded.report.ok()) {
      note += " mutated fixture accepted;";
      ok = false;
    }
  }
  return ok;
}

// Criterion 6: Pet Fish demo — byte-identical golden file with the
// direct-evaluation d_mu values and the guppy-effect verdict.
bool criterion6(std::string& note) {
  CliResult r = run_cli("petfish --file " + data("petfish.scop"));
  if (r.exit_code != 0) {
    note += " exit code " + std::to_string(r.exit_code);
    return false;
  }
  bool ok = true;
  if (r.out != read_all(data("golden/petfish.txt"))) {
    note += " output differs from golden file;";
    ok = false;
  }
  // Direct evaluation of sqrt(2(1-sqrt(mu))) at mu = 0.05, 0.05, 0.90.
  for (const char* needle :
       {"d_mu(guppy, ask_pet, p0) = 1.246108504",
        "d_mu(guppy, ask_fish, p0) = 1.246108504",
        "d_mu(guppy, ask_petfish, p0) = 0.320364486",
        "verdict: guppy effect present"}) {
    if (r.out.find(needle) == std::string::npos) {
      note += std::string(" missing '") + needle + "';";
      ok = false;
    }
  }
  return ok;
}

// Criterion 7: representational baselines cannot see the conjunction —
// prototype and exemplar distances for guppy-vs-pet and guppy-vs-fish all
// exceed the conjunction's d_w proximity (raw and normalized).
bool criterion7(std::string& note) {
  auto loaded = scop::load_scop_document(
      scop::parse_scop_text(read_all(data("petfish.scop"))));
  if (!loaded.report.ok() || !loaded.system || !loaded.petfish) {
    note += " petfish fixture failed to load";
    return false;
  }
  const auto& sys = *loaded.system;
  const auto& roles = *loaded.petfish;
  auto profile_of = [&](int idx) {
    return scop::profile_from_weights(sys, roles.weight_pairs[idx].first,
                                      roles.weight_pairs[idx].second,
                                      roles.features);
  };
  scop::PropertyDistance conj = scop::d_w(profile_of(0), profile_of(3));

  scop::ProfileTable table =
      scop::parse_profile_csv(read_all(data("petfish_profiles.csv")));
  auto profile = [&](const char* state, const char* context) {
    const auto* row = table.find(state, context);
    if (!row) throw scop::Error("missing row");
    return table.profile(*row);
  };
  auto guppy = profile("guppy", "stimulus");
  double proto_pet = scop::prototype_distance(guppy, profile("pet", "prototype"));
  double proto_fish =
      scop::prototype_distance(guppy, profile("fish", "prototype"));

  scop::ExemplarSet pets, fishes;
  pets.exemplars.emplace_back("dog", profile("dog", "exemplar"));
  pets.exemplars.emplace_back("cat", profile("cat", "exemplar"));
  pets.exemplars.emplace_back("canary", profile("canary", "exemplar"));
  fishes.exemplars.emplace_back("trout", profile("trout", "exemplar"));
  fishes.exemplars.emplace_back("salmon", profile("salmon", "exemplar"));
  fishes.exemplars.emplace_back("goldfish", profile("goldfish", "exemplar"));
  double ex_pet = scop::exemplar_distance(guppy, pets);
  double ex_fish = scop::exemplar_distance(guppy, fishes);

  std::ostringstream os;
  os << " proto(pet)=" << proto_pet << " proto(fish)=" << proto_fish
     << " ex(pet)=" << ex_pet << " ex(fish)=" << ex_fish
     << " dw(conj)=" << conj.normalized << "/" << conj.raw;
  note += os.str();

  const double bound = std::max(conj.normalized, conj.raw);
  return proto_pet > bound && proto_fish > bound && ex_pet > bound &&
         ex_fish > bound;
}

// Criterion 8: CHSH — deterministic strategies exhaustively classical; the
// singlet oracle at optimal angles reaches 2*sqrt(2) and is infeasible;
// random classical mixtures are feasible with faithful witnesses; < 5s.
bool criterion8(std::string& note) {
  auto start = std::chrono::steady_clock::now();
  bool ok = true;
  for (int s = 0; s < 16; ++s) {
    double value = scop::chsh_value(scop::deterministic_strategy_data(s));
    if (std::abs(value) > 2.0 + 1e-12) {
      note += " strategy " + scop::strategy_name(s) + " |S| > 2;";
      ok = false;
    }
  }

  auto singlet =
      scop::chsh_quantum_oracle(0.0, 3 * kPi / 4, 3 * kPi / 8, -3 * kPi / 8);
  double s_value = scop::chsh_value(singlet);
  if (std::abs(s_value - 2.0 * std::sqrt(2.0)) > 1e-9) {
    std::ostringstream os;
    os << " singlet S = " << s_value << ";";
    note += os.str();
    ok = false;
  }
  if (scop::kolmogorov_feasible(singlet).feasible) {
    note += " singlet data feasible;";
    ok = false;
  }

  std::mt19937_64 rng(271828);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 25; ++trial) {
    std::array<double, 16> weights{};
    double total = 0.0;
    for (auto& w : weights) total += (w = unit(rng));
    for (auto& w : weights) w /= total;

    scop::CorrelationData mix;
    for (int s = 0; s < 16; ++s) {
      auto pure = scop::deterministic_strategy_data(s);
      for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
          for (int u = 0; u < 2; ++u) {
            for (int v = 0; v < 2; ++v) {
              mix.tables[i][j].p[u][v] += weights[s] * pure.tables[i][j].p[u][v];
            }
          }
        }
      }
    }
    auto result = scop::kolmogorov_feasible(mix);
    if (!result.feasible || result.max_residual > 1e-9) {
      note += " mixture trial " + std::to_string(trial) + " failed;";
      ok = false;
    }
  }
  return ok && within_time(start, 5.0, note);
}

// Criterion 9: stochastic commands are byte-identical given the same seed.
bool criterion9(std::string& note) {
  bool ok = true;
  const std::string cmds[] = {
      "collapse --file " + data("petfish.scop") +
          " --context ask_pet --state p0 --steps 16 --seed 20260810",
      "collapse --file " + data("petfish.scop") +
          " --context ask_pet --state p0 --steps 16 --seed 20260810 "
          "--format structured",
      "petfish --file " + data("petfish.scop"),
      "chsh --file " + data("singlet_optimal.chsh")};
  for (const auto& cmd : cmds) {
    CliResult a = run_cli(cmd);
    CliResult b = run_cli(cmd);
    if (a.exit_code != 0 || a.out != b.out) {
      note += " nondeterministic or failing: " + cmd + ";";
      ok = false;
    }
  }
  return ok;
}

// Criterion 10: chi-square goodness of fit of sample_collapse frequencies
// against the stated distribution, p > 0.001 at 1e5 draws, 3 fixed kernels.
bool criterion10(std::string& note) {
  auto lattice = std::make_shared<const scop::PropertyLattice>(
      scop::PropertyLattice::powerset({"x"}));
  const std::vector<std::vector<double>> kernels = {
      {0.5, 0.5}, {0.7, 0.2, 0.1}, {0.25, 0.25, 0.25, 0.25}};
  bool ok = true;
  int kernel_index = 0;
  for (const auto& probs : kernels) {
    scop::ScopSystem sys(lattice);
    scop::StateId p0 = sys.add_state("p0");
    scop::ContextId e = sys.add_context("e");
    std::vector<scop::StateId> targets;
    for (std::size_t i = 0; i < probs.size(); ++i) {
      targets.push_back(sys.add_state("t" + std::to_string(i)));
    }
    for (std::size_t i = 0; i < probs.size(); ++i) {
      sys.set_transition(e, p0, e, targets[i], probs[i]);
    }

    const int kDraws = 100000;
    std::vector<int> counts(probs.size(), 0);
    scop::SeededRandomSource rng(97 + kernel_index);
    for (int draw = 0; draw < kDraws; ++draw) {
      auto t = scop::sample_collapse(sys, e, p0, rng);
      for (std::size_t i = 0; i < targets.size(); ++i) {
        if (t.q == targets[i]) ++counts[i];
      }
    }
    double stat = 0.0;
    for (std::size_t i = 0; i < probs.size(); ++i) {
      double expected = kDraws * probs[i];
      stat += (counts[i] - expected) * (counts[i] - expected) / expected;
    }
    double p_value = scop::testing::chi_square_pvalue(
        stat, static_cast<double>(probs.size() - 1));
    std::ostringstream os;
    os << " kernel" << kernel_index << " chi2=" << stat << " p=" << p_value
       << ";";
    note += os.str();
    if (!(p_value > 0.001)) ok = false;
    ++kernel_index;
  }
  return ok;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {1, "d_mu/theta_mu boundary cases (tol 1e-12, < 1s)", criterion1},
      {2, "quantum weight = collapse probability, 1000 random instances "
          "dims 2-8 (< 1e-10, < 10s)",
       criterion2},
      {3, "Hilbert distance matches d_mu on 1000 unit pairs (< 1e-10)",
       criterion3},
      {4, "lattice axiom suite: clean powersets + 6 mutation classes (< 5s)",
       criterion4},
      {5, "bundled fixtures normalized at 1e-9; mutated fixtures rejected",
       criterion5},
      {6, "Pet Fish demo: golden file + direct-evaluation distances",
       criterion6},
      {7, "baseline contrast: prototype/exemplar >> conjunction d_w",
       criterion7},
      {8, "CHSH: strategies classical, singlet 2*sqrt(2) infeasible, "
          "mixtures feasible (< 5s)",
       criterion8},
      {9, "determinism: same seed, byte-identical reports", criterion9},
      {10, "sampling fidelity: chi-square p > 0.001 at 1e5 draws, 3 kernels",
       criterion10},
  };

  int failures = 0;
  for (auto& criterion : criteria) {
    std::string notes;
    bool passed = false;
    try {
      passed = criterion.run(notes);
    } catch (const std::exception& e) {
      notes += std::string(" exception: ") + e.what();
    }
    std::cout << (passed ? "[PASS]" : "[FAIL]") << " criterion "
              << criterion.number << ": " << criterion.description;
    if (!notes.empty()) std::cout << " —" << notes;
    std::cout << "\n";
    if (!passed) ++failures;
  }
  if (failures == 0) {
    std::cout << "all acceptance criteria passed\n";
  } else {
    std::cout << failures << " acceptance criteria failed\n";
  }
  return failures;
}
