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

#pragma once

#include <span>
#include <vector>

#include "frqi/qsim/circuit.hpp"

namespace frqi::qsim {

/// Work qubits decompose_gate() needs for `gate` (k-1 for a k-controlled
/// NOT with k >= 3, k-2 for a k-controlled Ry with k >= 4, 0 otherwise).
unsigned work_qubits_required(const Gate& gate);

/// Expands a compound gate into {NOT, CNOT, Toffoli, Ry, single-controlled Ry}.
///
///  * k-controlled NOT (k >= 3): Toffoli ladder computing the AND of the
///    controls into work[0..k-2], one CNOT onto the target, then the ladder
///    uncomputed: 2(k-1) Toffoli + 1 CNOT. Work qubits must start in |0>
///    and are returned to |0>.
///  * k-controlled Ry(phi) (k >= 2): CRy(phi/2) from the last control, a
///    (k-1)-controlled NOT from the remaining controls, CRy(-phi/2), and the
///    same (k-1)-controlled NOT again; the inner NOTs are expanded too.
///  * Swap: three CNOTs.
///  * CNOT, Toffoli, single-controlled Ry: returned unchanged.
///
/// Zero-polarity controls are conjugated with NOT gates first.
/// Throws UnsupportedGateError for uncontrolled single-qubit gates and
/// InvalidArgumentError if `work` is too short or overlaps the gate.
std::vector<Gate> decompose_gate(const Gate& gate, std::span<const Qubit> work = {});

/// Decomposes every compound gate of `circuit`. Appends a work register
/// sized for the widest gate when one is needed. Block labels are kept.
Circuit decompose_circuit(const Circuit& circuit);

}  // namespace frqi::qsim
