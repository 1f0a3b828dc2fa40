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

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "frqi/image.hpp"
#include "frqi/qsim/gate.hpp"
#include "frqi/qsim/quantum_state.hpp"

namespace frqi::testing {

inline GrayImage random_image(std::size_t side, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> gray(0, 255);
  std::vector<std::uint8_t> pixels(side * side);
  for (auto& p : pixels) p = static_cast<std::uint8_t>(gray(rng));
  return GrayImage(side, std::move(pixels));
}

inline GrayImage image_from(std::size_t side, std::vector<int> values) {
  std::vector<std::uint8_t> pixels(values.begin(), values.end());
  return GrayImage(side, std::move(pixels));
}

inline qsim::QuantumState random_state(unsigned qubits, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  std::vector<qsim::Amplitude> amps(std::size_t{1} << qubits);
  double norm = 0.0;
  for (auto& a : amps) {
    a = {normal(rng), normal(rng)};
    norm += std::norm(a);
  }
  for (auto& a : amps) a /= std::sqrt(norm);
  return qsim::QuantumState::from_amplitudes(qubits, std::move(amps));
}

// Reference gate action written against the definition: for every basis
// index whose controls match, mix the (target=0, target=1) amplitude pair.
inline std::vector<qsim::Amplitude> naive_apply(const qsim::Gate& gate,
                                                std::vector<qsim::Amplitude> amps) {
  using qsim::GateKind;
  auto controls_match = [&](std::uint64_t index) {
    for (const auto& c : gate.controls()) {
      const bool bit = (index >> c.qubit) & 1U;
      if (bit != (c.polarity == qsim::Polarity::kOnOne)) return false;
    }
    return true;
  };
  const std::uint64_t size = amps.size();
  if (gate.kind() == GateKind::kSwap) {
    const auto a = gate.targets()[0];
    const auto b = gate.targets()[1];
    std::vector<qsim::Amplitude> out(size);
    for (std::uint64_t i = 0; i < size; ++i) {
      const std::uint64_t ba = (i >> a) & 1U;
      const std::uint64_t bb = (i >> b) & 1U;
      std::uint64_t j = i & ~((std::uint64_t{1} << a) | (std::uint64_t{1} << b));
      j |= (ba << b) | (bb << a);
      out[j] = amps[i];
    }
    return out;
  }
  double m00 = 0, m01 = 1, m10 = 1, m11 = 0;
  if (gate.kind() == GateKind::kHadamard) {
    const double r = 1.0 / std::sqrt(2.0);
    m00 = r, m01 = r, m10 = r, m11 = -r;
  } else if (gate.kind() == GateKind::kRy || gate.kind() == GateKind::kControlledRy) {
    const double c = std::cos(gate.angle() / 2), s = std::sin(gate.angle() / 2);
    m00 = c, m01 = -s, m10 = s, m11 = c;
  }
  const std::uint64_t bit = std::uint64_t{1} << gate.target();
  for (std::uint64_t i = 0; i < size; ++i) {
    if ((i & bit) || !controls_match(i)) continue;
    const auto a0 = amps[i];
    const auto a1 = amps[i | bit];
    amps[i] = m00 * a0 + m01 * a1;
    amps[i | bit] = m10 * a0 + m11 * a1;
  }
  return amps;
}

inline double max_diff(const std::vector<qsim::Amplitude>& a,
                       std::span<const qsim::Amplitude> b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

}  // namespace frqi::testing
