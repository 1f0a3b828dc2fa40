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
#include <utility>
#include <vector>

#include "frqi/image.hpp"
#include "frqi/qsim/circuit.hpp"
#include "frqi/qsim/quantum_state.hpp"

namespace frqi::codec {

/// Where an FRQI image lives inside a (possibly larger) register file.
///
/// Position qubits are [position_start, position_start + 2n) and carry the
/// pixel index i = Y * 2^n + X, so the low n of them hold X. Any qubit that
/// is neither position nor color is marginalized when decoding.
struct FrqiLayout {
  unsigned n = 0;
  qsim::Qubit position_start = 0;
  qsim::Qubit color = 0;

  /// Canonical 2n+1 qubit layout: positions [0, 2n), color 2n.
  static FrqiLayout canonical(unsigned n) { return {n, 0, 2 * n}; }
  unsigned total_qubits() const { return 2 * n + 1; }
};

/// theta = (pi/2) * g / 255.
double gray_to_angle(std::uint8_t gray);
/// round-half-up(255 * theta / (pi/2)) clamped to [0, 255]. Values within
/// 1e-6 gray levels below a half step round up, so angles carrying
/// floating-point error quantize the same way as their exact value.
std::uint8_t angle_to_gray(double angle);

AngleMap image_to_angles(const GrayImage& image);
GrayImage angles_to_image(const AngleMap& angles);

/// H on all 2n position qubits, then one 2n-controlled Ry(2 theta_i) per
/// position with zero-controls on the 0 bits of i.
qsim::Circuit preparation_circuit(const AngleMap& angles);

/// The FRQI state (1/2^n) sum_i (cos theta_i |0> + sin theta_i |1>) |i>,
/// built directly from the amplitudes.
qsim::QuantumState frqi_state(const AngleMap& angles,
                              const qsim::SimConfig& config = qsim::default_sim_config());

struct EncodedImage {
  qsim::QuantumState state;
  qsim::Circuit circuit;
};

/// Prepared state together with the circuit that prepares it from |0...0>.
EncodedImage encode_frqi(const AngleMap& angles,
                         const qsim::SimConfig& config = qsim::default_sim_config());

/// Reads theta_i = atan2(|amp(c=1,i)|, |amp(c=0,i)|) for each position,
/// marginalizing non-layout qubits. Throws NonFrqiStateError if a position
/// block's norm differs from 1/2^n by more than 1e-6.
AngleMap decode_exact(const qsim::QuantumState& state, const FrqiLayout& layout);

struct SampledAngles {
  AngleMap angles;
  /// False for positions that received no shot; their angle reads 0.
  std::vector<bool> sampled;
  std::uint64_t shots = 0;
};

/// Measurement-based retrieval: draws `shots` samples of (position, color)
/// and estimates theta_i = asin(sqrt(#(c=1, i) / #i)).
SampledAngles decode_sampled(const qsim::QuantumState& state, const FrqiLayout& layout,
                             std::uint64_t shots, std::uint64_t seed);

}  // namespace frqi::codec
