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

#include "frqi/qsim/decompose.hpp"

#include <algorithm>
#include <string>

#include "frqi/error.hpp"

namespace frqi::qsim {
namespace {

std::vector<Qubit> control_qubits(const std::vector<Control>& controls) {
  std::vector<Qubit> out;
  for (const auto& c : controls) out.push_back(c.qubit);
  return out;
}

void check_work(const Gate& gate, std::span<const Qubit> work, unsigned needed) {
  if (work.size() < needed) {
    throw InvalidArgumentError("decomposing " + gate.to_string() + " needs " +
                               std::to_string(needed) + " work qubits, got " +
                               std::to_string(work.size()));
  }
  for (unsigned i = 0; i < needed; ++i) {
    const Qubit w = work[i];
    const bool clash =
        std::find(gate.targets().begin(), gate.targets().end(), w) != gate.targets().end() ||
        std::any_of(gate.controls().begin(), gate.controls().end(),
                    [w](const Control& c) { return c.qubit == w; });
    if (clash) {
      throw InvalidArgumentError("work qubit " + std::to_string(w) + " overlaps " +
                                 gate.to_string());
    }
  }
}

// k >= 3 positive controls, k - 1 clean work qubits.
void emit_toffoli_ladder(const std::vector<Qubit>& controls, Qubit target,
                         std::span<const Qubit> work, std::vector<Gate>& out) {
  const std::size_t k = controls.size();
  std::vector<Gate> ladder;
  ladder.push_back(Gate::toffoli({controls[0]}, {controls[1]}, work[0]));
  for (std::size_t j = 2; j < k; ++j) {
    ladder.push_back(Gate::toffoli({controls[j]}, {work[j - 2]}, work[j - 1]));
  }
  out.insert(out.end(), ladder.begin(), ladder.end());
  out.push_back(Gate::cnot({work[k - 2]}, target));
  out.insert(out.end(), ladder.rbegin(), ladder.rend());
}

void emit_mcx(const std::vector<Qubit>& controls, Qubit target, std::span<const Qubit> work,
              std::vector<Gate>& out) {
  if (controls.size() <= 2) {
    out.push_back(Gate::mcx(Gate::on_one(controls), target));
  } else {
    emit_toffoli_ladder(controls, target, work, out);
  }
}

}  // namespace

unsigned work_qubits_required(const Gate& gate) {
  const auto k = static_cast<unsigned>(gate.num_controls());
  switch (gate.kind()) {
    case GateKind::kKControlledNot:
      return k - 1;
    case GateKind::kControlledRy:
      return k >= 4 ? k - 2 : 0;
    default:
      return 0;
  }
}

std::vector<Gate> decompose_gate(const Gate& gate, std::span<const Qubit> work) {
  switch (gate.kind()) {
    case GateKind::kNot:
    case GateKind::kHadamard:
    case GateKind::kRy:
      throw UnsupportedGateError("nothing to decompose in " + gate.to_string());
    case GateKind::kSwap: {
      if (gate.num_controls() != 0) {
        throw UnsupportedGateError("controlled Swap is not supported");
      }
      const Qubit a = gate.targets()[0];
      const Qubit b = gate.targets()[1];
      return {Gate::cnot({a}, b), Gate::cnot({b}, a), Gate::cnot({a}, b)};
    }
    default:
      break;
  }

  check_work(gate, work, work_qubits_required(gate));

  std::vector<Gate> flips;
  for (const auto& c : gate.controls()) {
    if (c.polarity == Polarity::kOnZero) flips.push_back(Gate::x(c.qubit));
  }
  const std::vector<Qubit> controls = control_qubits(gate.controls());
  const Qubit target = gate.target();

  std::vector<Gate> out = flips;
  switch (gate.kind()) {
    case GateKind::kCnot:
    case GateKind::kToffoli:
    case GateKind::kKControlledNot:
      emit_mcx(controls, target, work, out);
      break;
    case GateKind::kControlledRy:
      if (controls.size() == 1) {
        out.push_back(Gate::cry(Gate::on_one(controls), target, gate.angle()));
      } else {
        const Qubit last = controls.back();
        const std::vector<Qubit> rest(controls.begin(), controls.end() - 1);
        out.push_back(Gate::cry({{last}}, target, gate.angle() / 2.0));
        emit_mcx(rest, target, work, out);
        out.push_back(Gate::cry({{last}}, target, -gate.angle() / 2.0));
        emit_mcx(rest, target, work, out);
      }
      break;
    default:
      break;
  }
  out.insert(out.end(), flips.begin(), flips.end());
  return out;
}

Circuit decompose_circuit(const Circuit& circuit) {
  unsigned work_size = 0;
  for (const auto& g : circuit.gates()) {
    work_size = std::max(work_size, work_qubits_required(g));
  }

  Circuit out = circuit.layout_only();
  std::vector<Qubit> work;
  if (work_size > 0) work = out.add_register("work", RegisterRole::kWork, work_size).qubits();

  // new_start[i] is where gate i's expansion begins in `out`.
  std::vector<std::size_t> new_start(circuit.size() + 1, 0);
  for (std::size_t i = 0; i < circuit.size(); ++i) {
    new_start[i] = out.size();
    const Gate& g = circuit.gates()[i];
    const bool basic = g.kind() == GateKind::kNot || g.kind() == GateKind::kHadamard ||
                       g.kind() == GateKind::kRy;
    if (basic) {
      out.add(g);
    } else {
      for (auto& part : decompose_gate(g, work)) out.add(std::move(part));
    }
  }
  new_start[circuit.size()] = out.size();

  for (const auto& b : circuit.blocks()) {
    out.add_block({b.label, new_start[b.begin], new_start[b.end]});
  }
  return out;
}

}  // namespace frqi::qsim
