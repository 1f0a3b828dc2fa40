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

#include "frqi/qsim/circuit.hpp"
#include "frqi/qsim/quantum_state.hpp"

namespace frqi::qsim {

/// Applies one gate in place. Controlled gates act on the target subspace
/// only where every control matches its polarity.
void apply_gate(QuantumState& state, const Gate& gate);

/// Applies every gate of `circuit` in order, in place.
void apply_circuit_in_place(QuantumState& state, const Circuit& circuit);

/// Applies a gate range in order, in place. Gates are range checked by
/// apply_gate().
void apply_gates_in_place(QuantumState& state, std::span<const Gate> gates);

/// Value form of apply_circuit_in_place().
QuantumState apply_circuit(QuantumState state, const Circuit& circuit);

}  // namespace frqi::qsim
