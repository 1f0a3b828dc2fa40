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

#include "frqi/qsim/gate_cost.hpp"

namespace frqi::qsim {

std::int64_t mcx_cnot_cost(unsigned controls) {
  switch (controls) {
    case 0: return 0;
    case 1: return 1;
    case 2: return 6;
    default: return 12 * static_cast<std::int64_t>(controls) - 11;
  }
}

std::int64_t cry_cnot_cost(unsigned controls) {
  if (controls == 0) return 0;
  if (controls == 1) return 2;
  return 2 * cry_cnot_cost(1) + 2 * mcx_cnot_cost(controls - 1);
}

std::int64_t gate_cnot_cost(const Gate& gate) {
  const auto k = static_cast<unsigned>(gate.num_controls());
  switch (gate.kind()) {
    case GateKind::kNot:
    case GateKind::kHadamard:
    case GateKind::kRy:
      return 0;
    case GateKind::kCnot:
    case GateKind::kToffoli:
    case GateKind::kKControlledNot:
      return mcx_cnot_cost(k);
    case GateKind::kControlledRy:
      return cry_cnot_cost(k);
    case GateKind::kSwap:
      return 3;
  }
  return 0;
}

std::int64_t GateCounts::total_gates() const {
  std::int64_t total = not_gates + hadamard + cnot + toffoli + swap + ry;
  for (const auto& [k, c] : kcnot_by_controls) total += c;
  for (const auto& [k, c] : cry_by_controls) total += c;
  return total;
}

GateCounts& GateCounts::operator+=(const GateCounts& other) {
  not_gates += other.not_gates;
  implied_not_gates += other.implied_not_gates;
  hadamard += other.hadamard;
  cnot += other.cnot;
  toffoli += other.toffoli;
  swap += other.swap;
  ry += other.ry;
  for (const auto& [k, c] : other.kcnot_by_controls) kcnot_by_controls[k] += c;
  for (const auto& [k, c] : other.cry_by_controls) cry_by_controls[k] += c;
  cnot_equivalent += other.cnot_equivalent;
  return *this;
}

GateCounts count_gates(std::span<const Gate> gates) {
  GateCounts counts;
  for (const auto& g : gates) {
    counts.implied_not_gates += 2 * static_cast<std::int64_t>(g.num_zero_controls());
    counts.cnot_equivalent += gate_cnot_cost(g);
    switch (g.kind()) {
      case GateKind::kNot: ++counts.not_gates; break;
      case GateKind::kHadamard: ++counts.hadamard; break;
      case GateKind::kCnot: ++counts.cnot; break;
      case GateKind::kToffoli: ++counts.toffoli; break;
      case GateKind::kKControlledNot:
        ++counts.kcnot_by_controls[static_cast<unsigned>(g.num_controls())];
        break;
      case GateKind::kRy: ++counts.ry; break;
      case GateKind::kControlledRy:
        ++counts.cry_by_controls[static_cast<unsigned>(g.num_controls())];
        break;
      case GateKind::kSwap: ++counts.swap; break;
    }
  }
  return counts;
}

GateCounts count_gates(const Circuit& circuit) { return count_gates(circuit.gates()); }

CostReport cnot_equivalent_cost(const Circuit& circuit) {
  CostReport report;
  report.counts = count_gates(circuit);
  report.cnot_equivalent_total = report.counts.cnot_equivalent;
  for (const auto& b : circuit.blocks()) {
    const std::string family = b.label.substr(0, b.label.find('-'));
    const std::span<const Gate> all(circuit.gates());
    report.by_module[family] += count_gates(all.subspan(b.begin, b.end - b.begin));
  }
  return report;
}

}  // namespace frqi::qsim
