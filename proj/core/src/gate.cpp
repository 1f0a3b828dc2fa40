// Copyright 2026 The frqi-interp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "frqi/qsim/gate.hpp"

#include <algorithm>
#include <sstream>

#include "frqi/error.hpp"

namespace frqi::qsim {
namespace {

void check_distinct(const std::vector<Qubit>& targets, const std::vector<Control>& controls) {
  std::vector<Qubit> all = targets;
  for (const auto& c : controls) all.push_back(c.qubit);
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end()) {
    throw InvalidArgumentError("gate qubits must be pairwise distinct");
  }
}

}  // namespace

Gate::Gate(GateKind kind, std::vector<Qubit> targets, std::vector<Control> controls,
           double angle)
    : kind_(kind), targets_(std::move(targets)), controls_(std::move(controls)), angle_(angle) {
  check_distinct(targets_, controls_);
}

Gate Gate::x(Qubit target) { return Gate(GateKind::kNot, {target}, {}, 0.0); }
Gate Gate::h(Qubit target) { return Gate(GateKind::kHadamard, {target}, {}, 0.0); }
Gate Gate::ry(Qubit target, double angle) { return Gate(GateKind::kRy, {target}, {}, angle); }
Gate Gate::swap(Qubit a, Qubit b) { return Gate(GateKind::kSwap, {a, b}, {}, 0.0); }

Gate Gate::cnot(Control control, Qubit target) {
  return Gate(GateKind::kCnot, {target}, {control}, 0.0);
}

Gate Gate::toffoli(Control c0, Control c1, Qubit target) {
  return Gate(GateKind::kToffoli, {target}, {c0, c1}, 0.0);
}

Gate Gate::mcx(std::vector<Control> controls, Qubit target) {
  GateKind kind = GateKind::kKControlledNot;
  switch (controls.size()) {
    case 0: kind = GateKind::kNot; break;
    case 1: kind = GateKind::kCnot; break;
    case 2: kind = GateKind::kToffoli; break;
    default: break;
  }
  return Gate(kind, {target}, std::move(controls), 0.0);
}

Gate Gate::cry(std::vector<Control> controls, Qubit target, double angle) {
  if (controls.empty()) {
    throw InvalidArgumentError("controlled Ry needs at least one control");
  }
  return Gate(GateKind::kControlledRy, {target}, std::move(controls), angle);
}

std::vector<Control> Gate::on_one(const std::vector<Qubit>& qubits) {
  std::vector<Control> out;
  out.reserve(qubits.size());
  for (Qubit q : qubits) out.push_back({q, Polarity::kOnOne});
  return out;
}

std::size_t Gate::num_zero_controls() const noexcept {
  return static_cast<std::size_t>(std::count_if(
      controls_.begin(), controls_.end(),
      [](const Control& c) { return c.polarity == Polarity::kOnZero; }));
}

Qubit Gate::max_qubit() const noexcept {
  Qubit q = 0;
  for (Qubit t : targets_) q = std::max(q, t);
  for (const auto& c : controls_) q = std::max(q, c.qubit);
  return q;
}

const char* to_string(GateKind kind) {
  switch (kind) {
    case GateKind::kNot: return "NOT";
    case GateKind::kHadamard: return "H";
    case GateKind::kCnot: return "CNOT";
    case GateKind::kToffoli: return "Toffoli";
    case GateKind::kKControlledNot: return "KCNOT";
    case GateKind::kRy: return "Ry";
    case GateKind::kControlledRy: return "CRy";
    case GateKind::kSwap: return "Swap";
  }
  return "?";
}

std::string Gate::to_string() const {
  std::ostringstream out;
  out << qsim::to_string(kind_);
  if (kind_ == GateKind::kRy || kind_ == GateKind::kControlledRy) out << "(" << angle_ << ")";
  out << " t=";
  for (std::size_t i = 0; i < targets_.size(); ++i) out << (i ? "," : "") << targets_[i];
  if (!controls_.empty()) {
    out << " c=";
    for (std::size_t i = 0; i < controls_.size(); ++i) {
      out << (i ? "," : "") << (controls_[i].polarity == Polarity::kOnZero ? "!" : "")
          << controls_[i].qubit;
    }
  }
  return out.str();
}

}  // namespace frqi::qsim
