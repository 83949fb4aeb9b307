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

#include "scop/core.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "scop/errors.hpp"

namespace scop {

std::string_view to_string(CoupleClass c) {
  switch (c) {
    case CoupleClass::Potentiality:
      return "Potentiality";
    case CoupleClass::Deterministic:
      return "Deterministic";
    case CoupleClass::Eigen:
      return "Eigen";
  }
  return "?";
}

double ScopRealization::reduced_probability(StateId q, ContextId e,
                                            StateId p) const {
  double sum = 0.0;
  for (const TransitionEntry& t : transition_distribution(e, p)) {
    if (t.q == q) sum += t.probability;
  }
  return sum;
}

CoupleClass classify_couple(const ScopRealization& s, ContextId e, StateId p,
                            double eps) {
  auto dist = s.transition_distribution(e, p);
  const TransitionEntry* best = nullptr;
  for (const auto& t : dist) {
    if (!best || t.probability > best->probability) best = &t;
  }
  if (!best || best->probability < 1.0 - eps) return CoupleClass::Potentiality;
  return best->q == p ? CoupleClass::Eigen : CoupleClass::Deterministic;
}

TransitionEntry sample_collapse(const ScopRealization& s, ContextId e,
                                StateId p, SeededRandomSource& rng) {
  auto dist = s.transition_distribution(e, p);
  if (dist.empty()) {
    throw UnknownCoupleError("couple has an empty distribution");
  }
  std::sort(dist.begin(), dist.end(), [](const auto& a, const auto& b) {
    return std::pair(a.f.index, a.q.index) < std::pair(b.f.index, b.q.index);
  });
  double u = rng.next_unit();
  double cum = 0.0;
  for (const auto& t : dist) {
    cum += t.probability;
    if (u < cum) return t;
  }
  return dist.back();
}

CollapseTrajectory collapse_sequence(const ScopRealization& s, ContextId e0,
                                     StateId p0, std::size_t steps,
                                     SeededRandomSource& rng) {
  CollapseTrajectory traj;
  ContextId e = e0;
  StateId p = p0;
  traj.couples.emplace_back(e, p);
  for (std::size_t step = 1; step <= steps; ++step) {
    try {
      if (classify_couple(s, e, p) == CoupleClass::Eigen) {
        traj.truncated_at = step;
        break;
      }
      TransitionEntry t = sample_collapse(s, e, p, rng);
      e = t.f;
      p = t.q;
    } catch (const UnknownCoupleError& err) {
      throw UnknownCoupleError(std::string(err.what()) + " at step " +
                               std::to_string(step));
    }
    traj.couples.emplace_back(e, p);
  }
  return traj;
}

void TransitionKernel::add(ContextId e, StateId p, ContextId f, StateId q,
                           double probability) {
  auto& row = rows_[{e.index, p.index}];
  TransitionEntry entry{f, q, probability};
  auto pos = std::lower_bound(
      row.begin(), row.end(), entry, [](const auto& a, const auto& b) {
        return std::pair(a.f.index, a.q.index) < std::pair(b.f.index, b.q.index);
      });
  if (pos != row.end() && pos->f == f && pos->q == q) {
    throw DuplicateEntryError("duplicate kernel entry for the same (f, q)");
  }
  row.insert(pos, entry);
}

const std::vector<TransitionEntry>* TransitionKernel::row(ContextId e,
                                                          StateId p) const {
  auto it = rows_.find({e.index, p.index});
  if (it == rows_.end()) return nullptr;
  return &it->second;
}

void WeightTable::set(StateId p, ContextId e, PropertyId a, double w) {
  auto key = std::tuple(p.index, e.index, a.index);
  if (!entries_.emplace(key, w).second) {
    throw DuplicateEntryError("duplicate weight entry for the same (p, e, a)");
  }
}

std::optional<double> WeightTable::get(StateId p, ContextId e,
                                       PropertyId a) const {
  auto it = entries_.find(std::tuple(p.index, e.index, a.index));
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

ScopSystem::ScopSystem(std::shared_ptr<const PropertyLattice> lattice)
    : lattice_(std::move(lattice)) {
  if (!lattice_) throw Error("ScopSystem requires a lattice");
}

StateId ScopSystem::add_state(std::string label) {
  return StateId(states_.add(std::move(label)));
}

ContextId ScopSystem::add_context(std::string label) {
  return ContextId(contexts_.add(std::move(label)));
}

void ScopSystem::set_transition(ContextId e, StateId p, ContextId f, StateId q,
                                double probability) {
  if (e.index >= contexts_.size() || f.index >= contexts_.size() ||
      p.index >= states_.size() || q.index >= states_.size()) {
    throw UnknownIdError("kernel entry references an unregistered id");
  }
  kernel_.add(e, p, f, q, probability);
}

void ScopSystem::set_weight(StateId p, ContextId e, PropertyId a, double w) {
  if (e.index >= contexts_.size() || p.index >= states_.size() ||
      a.index >= lattice_->size()) {
    throw UnknownIdError("weight entry references an unregistered id");
  }
  weights_.set(p, e, a, w);
}

std::vector<TransitionEntry> ScopSystem::transition_distribution(
    ContextId e, StateId p) const {
  const auto* row = kernel_.row(e, p);
  if (!row) {
    std::string what = "unknown couple (";
    what += e.index < contexts_.size() ? contexts_.label(e.index) : "?";
    what += ", ";
    what += p.index < states_.size() ? states_.label(p.index) : "?";
    what += "): no kernel row";
    throw UnknownCoupleError(what);
  }
  return *row;
}

double ScopSystem::weight(StateId p, ContextId e, PropertyId a) const {
  auto w = weights_.get(p, e, a);
  if (!w) {
    throw UnknownEntryError("weight ν(" + states_.label(p.index) + ", " +
                            contexts_.label(e.index) + ", " +
                            lattice_->label(a) + ") is undefined");
  }
  return *w;
}

std::vector<StateId> ScopSystem::states() const {
  std::vector<StateId> out;
  out.reserve(states_.size());
  for (std::uint32_t i = 0; i < states_.size(); ++i) out.push_back(StateId(i));
  return out;
}

std::vector<ContextId> ScopSystem::contexts() const {
  std::vector<ContextId> out;
  out.reserve(contexts_.size());
  for (std::uint32_t i = 0; i < contexts_.size(); ++i)
    out.push_back(ContextId(i));
  return out;
}

const std::string& ScopSystem::state_label(StateId p) const {
  return states_.label(p.index);
}

const std::string& ScopSystem::context_label(ContextId e) const {
  return contexts_.label(e.index);
}

std::optional<StateId> ScopSystem::find_state(std::string_view label) const {
  auto i = states_.find(label);
  if (!i) return std::nullopt;
  return StateId(*i);
}

std::optional<ContextId> ScopSystem::find_context(std::string_view label) const {
  auto i = contexts_.find(label);
  if (!i) return std::nullopt;
  return ContextId(*i);
}

std::optional<PropertyId> ScopSystem::find_property(
    std::string_view label) const {
  return lattice_->find(label);
}

const std::string& ScopSystem::property_label(PropertyId a) const {
  return lattice_->label(a);
}

ValidationReport ScopSystem::validate(double eps) const {
  ValidationReport report;

  for (const auto& [key, row] : kernel_.rows()) {
    const std::string couple = "(" + contexts_.label(key.first) + ", " +
                               states_.label(key.second) + ")";
    double sum = 0.0;
    for (const auto& t : row) {
      if (t.probability < 0.0 || t.probability > 1.0) {
        std::ostringstream os;
        os << "kernel entry " << couple << " -> (" << contexts_.label(t.f.index)
           << ", " << states_.label(t.q.index) << ") has probability "
           << t.probability;
        report.add("kernel.range", os.str());
      }
      sum += t.probability;
    }
    if (std::abs(sum - 1.0) > eps) {
      std::ostringstream os;
      os << "kernel row " << couple << " sums to " << sum;
      report.add("kernel.normalization", os.str());
    }
  }

  for (const auto& [key, w] : weights_.entries()) {
    auto [pi, ei, ai] = key;
    if (w < 0.0 || w > 1.0) {
      std::ostringstream os;
      os << "weight ν(" << states_.label(pi) << ", " << contexts_.label(ei)
         << ", " << lattice_->label(PropertyId(ai)) << ") = " << w;
      report.add("weight.range", os.str());
    }
    PropertyId comp = lattice_->complement_of(PropertyId(ai));
    if (comp.index == ai && std::abs(2.0 * w - 1.0) > eps) {
      std::ostringstream os;
      os << "self-complementary weight ν(" << states_.label(pi) << ", "
         << contexts_.label(ei) << ", " << lattice_->label(PropertyId(ai))
         << ") must be 0.5, got " << w;
      report.add("weight.complement", os.str());
      continue;
    }
    if (comp.index <= ai) continue;  // report each pair once
    auto wc = weights_.get(StateId(std::get<0>(key)), ContextId(ei), comp);
    if (wc && std::abs(w + *wc - 1.0) > eps) {
      std::ostringstream os;
      os << "complement weights ν(" << states_.label(pi) << ", "
         << contexts_.label(ei) << ", " << lattice_->label(PropertyId(ai))
         << ") + ν(..., " << lattice_->label(comp) << ") sum to " << (w + *wc);
      report.add("weight.complement", os.str());
    }
  }

  return report;
}

ScopSystem ScopSystem::relativize(PropertyId a, double threshold) const {
  if (a.index >= lattice_->size()) {
    throw UnknownElementError("relativize: property not in lattice");
  }

  std::vector<bool> survives(states_.size(), true);
  for (const auto& [key, w] : weights_.entries()) {
    auto [pi, ei, ai] = key;
    if (ai == a.index && w < threshold) survives[pi] = false;
  }
  std::size_t kept = 0;
  for (bool s : survives) kept += s ? 1 : 0;
  if (kept == 0) {
    throw EmptyRestrictionError(
        "relativize: no state keeps '" + lattice_->label(a) +
        "' actual at threshold " + std::to_string(threshold));
  }

  ScopSystem out(lattice_);
  std::vector<StateId> remap(states_.size());
  for (std::uint32_t i = 0; i < states_.size(); ++i) {
    if (survives[i]) remap[i] = out.add_state(states_.label(i));
  }
  for (std::uint32_t i = 0; i < contexts_.size(); ++i) {
    out.add_context(contexts_.label(i));
  }

  for (const auto& [key, row] : kernel_.rows()) {
    if (!survives[key.second]) continue;
    double mass = 0.0;
    for (const auto& t : row) {
      if (survives[t.q.index]) mass += t.probability;
    }
    if (mass <= 0.0) continue;  // couple becomes undefined in the restriction
    for (const auto& t : row) {
      if (!survives[t.q.index]) continue;
      out.set_transition(ContextId(key.first), remap[key.second], t.f,
                         remap[t.q.index], t.probability / mass);
    }
  }

  for (const auto& [key, w] : weights_.entries()) {
    auto [pi, ei, ai] = key;
    if (!survives[pi]) continue;
    out.set_weight(remap[pi], ContextId(ei), PropertyId(ai), w);
  }
  return out;
}

}  // namespace scop
