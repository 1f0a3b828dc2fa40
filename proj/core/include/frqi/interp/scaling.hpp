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

#include <array>
#include <optional>
#include <vector>

#include "frqi/codec/frqi.hpp"
#include "frqi/image.hpp"
#include "frqi/interp/weights.hpp"
#include "frqi/qsim/circuit.hpp"

namespace frqi::interp {

enum class Direction { kUp, kDown };

/// n is the source exponent when up-scaling and the target exponent when
/// down-scaling; the ratio is 2^m per axis.
struct ScaleSpec {
  unsigned n = 1;
  unsigned m = 1;
  Direction direction = Direction::kUp;
};

enum class SwapMode {
  /// All weighted rotations land on one color qubit.
  kAccumulate,
  /// Two color wires; stages alternate wires and a Swap after every stage
  /// carries the running sum forward, ending back on the primary wire.
  kLiteralSwap,
};

struct BuildOptions {
  WeightMode weights = WeightMode::kStandard;
  SwapMode swap = SwapMode::kAccumulate;
  /// Emit one Ry(2 w theta) per (offset, position) instead of CA + WA.
  bool fused = false;
  /// Expand every compound gate with decompose_circuit().
  bool decompose = false;
  /// Enforce the qubit budget (set false to build circuits for auditing).
  bool dense = true;
  qsim::SimConfig sim;
};

const char* to_string(SwapMode mode);

struct UpscaleLayout {
  unsigned n = 0;
  unsigned m = 0;
  /// 2(n+m) qubits holding |Y'>|X'>.
  qsim::Register target;
  /// (X,Y), (X+1,Y), (X,Y+1), (X+1,Y+1), 2n qubits each.
  std::array<qsim::Register, 4> neighbors;
  qsim::Register color;
  std::optional<qsim::Register> aux_color;
  std::optional<qsim::Register> work;

  /// Offset qubits: low m bits of X' then low m bits of Y'.
  std::vector<qsim::Qubit> offset_qubits() const;
  /// Output image layout (target position + primary color).
  codec::FrqiLayout output_layout() const;
};

struct DownscaleLayout {
  unsigned n = 0;
  unsigned m = 0;
  /// 2n qubits holding |Y'>|X'>.
  qsim::Register target;
  /// High bits of P1..P4, 2n qubits each (X high bits, then Y high bits).
  std::array<qsim::Register, 4> samples;
  /// 2m qubits that stay |0>: low m bits of X, then low m bits of Y, shared
  /// by all four sample coordinates.
  qsim::Register low_bits;
  qsim::Register color;
  std::optional<qsim::Register> aux_color;
  std::optional<qsim::Register> work;

  /// Full 2(n+m)-bit source coordinate of sample `which` (0..3), X then Y.
  std::vector<qsim::Qubit> source_qubits(int which) const;
  codec::FrqiLayout output_layout() const;
};

struct UpscaleCircuit {
  qsim::Circuit circuit;
  UpscaleLayout layout;
};

struct DownscaleCircuit {
  qsim::Circuit circuit;
  DownscaleLayout layout;
};

/// Dense qubit count of the up-scaling circuit before decomposition.
unsigned upscale_qubits(unsigned n, unsigned m, SwapMode swap);
unsigned downscale_qubits(unsigned n, unsigned m, SwapMode swap);

/// Up-scaling network for a 2^n source at ratio 2^m:
///   prep   H on the target register;
///   step 1 PA copies of the high n bits of X' and Y' into neighbor 1;
///   step 2 PA/Omega blocks filling neighbors 2..4 (X+1 and Y+1 clamp);
///   step 3 CA-i then WA-i for i = 1..4 on the color wire(s).
/// Throws BudgetExceededError when options.dense and the qubit count
/// exceeds options.sim.qubit_budget.
UpscaleCircuit build_upscale_circuit(const AngleMap& source, unsigned m,
                                     const BuildOptions& options = {});
UpscaleCircuit build_upscale_circuit(const GrayImage& source, unsigned m,
                                     const BuildOptions& options = {});

/// Down-scaling network for a 2^(n+m) source to 2^n:
///   prep   H on the target register;
///   step 1 PA copies of X', Y' into the high bits of P1;
///   step 2 PA/Omega blocks for P2..P4 (Omega on the n high bits only);
///   step 3 QUARTER-i for i = 1..4.
/// Throws InvalidArgumentError if the source side is below 2^(m+1).
DownscaleCircuit build_downscale_circuit(const AngleMap& source, unsigned m,
                                         const BuildOptions& options = {});
DownscaleCircuit build_downscale_circuit(const GrayImage& source, unsigned m,
                                         const BuildOptions& options = {});

}  // namespace frqi::interp
