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

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "frqi/qsim/circuit.hpp"

namespace frqi::qsim {

/// CNOT-equivalent weight of a k-controlled NOT: 0 for k = 0 (single-qubit
/// gates are free), 1 for CNOT, 6 for Toffoli, 12k - 11 for k >= 3.
std::int64_t mcx_cnot_cost(unsigned controls);

/// CNOT-equivalent weight of a k-controlled Ry: 0 for k = 0, 2 for k = 1,
/// 2·2 + 2·mcx_cnot_cost(k - 1) for k >= 2 (two half-angle CRy plus two
/// (k-1)-controlled NOTs).
std::int64_t cry_cnot_cost(unsigned controls);

/// CNOT-equivalent weight of one gate. NOT gates, including the conjugating
/// NOTs implied by zero-polarity controls, weigh 0 here.
std::int64_t gate_cnot_cost(const Gate& gate);

/// Per-class gate tallies.
struct GateCounts {
  std::int64_t not_gates = 0;
  /// NOTs needed to realize zero-polarity controls (two per such control).
  std::int64_t implied_not_gates = 0;
  std::int64_t hadamard = 0;
  std::int64_t cnot = 0;
  std::int64_t toffoli = 0;
  std::int64_t swap = 0;
  std::int64_t ry = 0;
  /// k-controlled NOT (k >= 3) by k.
  std::map<unsigned, std::int64_t> kcnot_by_controls;
  /// Controlled Ry by number of controls.
  std::map<unsigned, std::int64_t> cry_by_controls;

  /// Sum of gate_cnot_cost() over the counted gates.
  std::int64_t cnot_equivalent = 0;

  std::int64_t total_gates() const;
  GateCounts& operator+=(const GateCounts& other);
};

GateCounts count_gates(std::span<const Gate> gates);
GateCounts count_gates(const Circuit& circuit);

/// Exact counts plus, when a closed form applies, the value it predicts.
struct CostReport {
  GateCounts counts;
  /// CNOT-equivalent total with NOT gates excluded.
  std::int64_t cnot_equivalent_total = 0;
  std::optional<std::int64_t> paper_formula_value;
  /// Counts per module family ("PA", "OMEGA", "CA", ...). A nested block is
  /// counted in every family that contains it, so these need not add up to
  /// the total.
  std::map<std::string, GateCounts> by_module;
  std::vector<std::string> discrepancy_notes;
};

CostReport cnot_equivalent_cost(const Circuit& circuit);

}  // namespace frqi::qsim
