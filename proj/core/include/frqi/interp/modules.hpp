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

#include "frqi/image.hpp"
#include "frqi/interp/weights.hpp"
#include "frqi/qsim/circuit.hpp"

namespace frqi::interp {

// Register arguments are qubit lists in significance order: element j holds
// bit j of the value the register encodes. Position registers hold
// i = Y * 2^n + X, so their low half is X.

/// PA: fan-out copy of `source` into `dest` (|0> on entry), one CNOT per bit.
/// Throws InvalidArgumentError on a size mismatch or overlapping registers.
qsim::Circuit build_pa(std::span<const qsim::Qubit> source,
                       std::span<const qsim::Qubit> dest);

/// Increment with clamp: maps |s>_ref |0>_reg to |s>_ref |min(s + 1, 2^n - 1)>_reg.
///
/// Layout: a PA copy of ref into reg (n CNOT), then an n-controlled NOT from
/// ref onto reg[0] that turns the all-ones copy into 2^n - 2, then an
/// in-place ripple increment of reg (k-controlled NOTs for k = n-1 .. 1, and
/// a NOT on reg[0]). Totals: n+1 CNOT, 1 Toffoli, one k-controlled NOT for
/// each k = 3..n and 1 NOT (n >= 2).
///
/// A clamped increment is not injective on n qubits alone, hence the
/// reference register.
qsim::Circuit build_omega(std::span<const qsim::Qubit> ref,
                          std::span<const qsim::Qubit> reg);

/// CA: for every position p of `angles`, a 2n-controlled Ry(2 theta_p) on
/// `color`, controlled on `neighbor` == p.
qsim::Circuit build_ca(std::span<const qsim::Qubit> neighbor, qsim::Qubit color,
                       const AngleMap& angles);

/// WA for neighbor `which` (1..4): for every offset (x, y) and position p,
/// Ry(2 (w_which(x, y) - 1) theta_p) on `color`, controlled jointly on
/// `offset` == y * 2^m + x and `neighbor` == p.
qsim::Circuit build_wa(std::span<const qsim::Qubit> offset,
                       std::span<const qsim::Qubit> neighbor, qsim::Qubit color,
                       const AngleMap& angles, int which,
                       WeightMode mode = WeightMode::kStandard);

/// CA-i and WA-i fused: Ry(2 w_which(x, y) theta_p) per (offset, position).
qsim::Circuit build_fused_ca_wa(std::span<const qsim::Qubit> offset,
                                std::span<const qsim::Qubit> neighbor,
                                qsim::Qubit color, const AngleMap& angles, int which,
                                WeightMode mode = WeightMode::kStandard);

/// QUARTER: for every source position p whose low m bits of X and Y are
/// zero, Ry(2 theta_p / 4) on `color`, controlled on all 2(n+m) `source`
/// qubits. `source` has 2(n+m) entries: X bits then Y bits.
qsim::Circuit build_quarter(std::span<const qsim::Qubit> source, qsim::Qubit color,
                            const AngleMap& angles, unsigned m);

}  // namespace frqi::interp
