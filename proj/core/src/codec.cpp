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

#include "frqi/codec/frqi.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "frqi/error.hpp"
#include "frqi/qsim/simulator.hpp"

namespace frqi::codec {
namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;
// Gray levels within this distance below a half step still round up.
constexpr double kQuantizeSlack = 1e-6;
constexpr double kBlockNormTolerance = 1e-6;

void check_layout(const qsim::QuantumState& state, const FrqiLayout& layout) {
  const unsigned positions = 2 * layout.n;
  const bool color_in_positions =
      layout.color >= layout.position_start && layout.color < layout.position_start + positions;
  if (layout.position_start + positions > state.num_qubits() ||
      layout.color >= state.num_qubits() || color_in_positions) {
    throw InvalidArgumentError("FRQI layout does not fit a " +
                               std::to_string(state.num_qubits()) + "-qubit state");
  }
}

// probabilities[c * pixels + i] = P(color = c, position = i).
std::vector<double> marginal_probabilities(const qsim::QuantumState& state,
                                           const FrqiLayout& layout) {
  const std::size_t pixels = std::size_t{1} << (2 * layout.n);
  const std::uint64_t position_mask = pixels - 1;
  std::vector<double> probabilities(2 * pixels, 0.0);
  const auto amps = state.amplitudes();
  for (std::uint64_t idx = 0; idx < amps.size(); ++idx) {
    const double p = std::norm(amps[idx]);
    if (p == 0.0) continue;
    const std::uint64_t position = (idx >> layout.position_start) & position_mask;
    const std::uint64_t color = (idx >> layout.color) & 1U;
    probabilities[color * pixels + position] += p;
  }
  return probabilities;
}

}  // namespace

double gray_to_angle(std::uint8_t gray) { return kHalfPi * static_cast<double>(gray) / 255.0; }

std::uint8_t angle_to_gray(double angle) {
  const double level = std::floor(255.0 * angle / kHalfPi + 0.5 + kQuantizeSlack);
  return static_cast<std::uint8_t>(std::clamp(level, 0.0, 255.0));
}

AngleMap image_to_angles(const GrayImage& image) {
  std::vector<double> angles(image.size());
  std::transform(image.pixels().begin(), image.pixels().end(), angles.begin(), gray_to_angle);
  return AngleMap(image.side(), std::move(angles));
}

GrayImage angles_to_image(const AngleMap& angles) {
  std::vector<std::uint8_t> pixels(angles.size());
  std::transform(angles.angles().begin(), angles.angles().end(), pixels.begin(),
                 angle_to_gray);
  return GrayImage(angles.side(), std::move(pixels));
}

qsim::Circuit preparation_circuit(const AngleMap& angles) {
  const unsigned n = angles.exponent();
  qsim::Circuit circuit;
  const auto position = circuit.add_register("position", qsim::RegisterRole::kPosition, 2 * n);
  const auto color = circuit.add_register("color", qsim::RegisterRole::kColor, 1);

  circuit.begin_block("PREP");
  for (unsigned q = 0; q < position.size; ++q) circuit.add(qsim::Gate::h(position[q]));
  circuit.end_block();

  circuit.begin_block("COLOR");
  for (std::size_t i = 0; i < angles.size(); ++i) {
    if (n == 0) {
      circuit.add(qsim::Gate::ry(color[0], 2.0 * angles[i]));
      continue;
    }
    std::vector<qsim::Control> controls;
    for (unsigned b = 0; b < position.size; ++b) {
      controls.push_back({position[b], ((i >> b) & 1U) ? qsim::Polarity::kOnOne
                                                       : qsim::Polarity::kOnZero});
    }
    circuit.add(qsim::Gate::cry(std::move(controls), color[0], 2.0 * angles[i]));
  }
  circuit.end_block();
  return circuit;
}

qsim::QuantumState frqi_state(const AngleMap& angles, const qsim::SimConfig& config) {
  const unsigned n = angles.exponent();
  qsim::check_budget(2 * n + 1, config);
  const std::size_t pixels = angles.size();
  const double scale = std::ldexp(1.0, -static_cast<int>(n));
  std::vector<qsim::Amplitude> amps(2 * pixels);
  for (std::size_t i = 0; i < pixels; ++i) {
    amps[i] = scale * std::cos(angles[i]);
    amps[pixels + i] = scale * std::sin(angles[i]);
  }
  return qsim::QuantumState::from_amplitudes(2 * n + 1, std::move(amps), config);
}

EncodedImage encode_frqi(const AngleMap& angles, const qsim::SimConfig& config) {
  return EncodedImage{frqi_state(angles, config), preparation_circuit(angles)};
}

AngleMap decode_exact(const qsim::QuantumState& state, const FrqiLayout& layout) {
  check_layout(state, layout);
  const std::size_t pixels = std::size_t{1} << (2 * layout.n);
  const auto probabilities = marginal_probabilities(state, layout);
  const double block_norm = std::ldexp(1.0, -static_cast<int>(layout.n));

  std::vector<double> angles(pixels);
  for (std::size_t i = 0; i < pixels; ++i) {
    const double p0 = probabilities[i];
    const double p1 = probabilities[pixels + i];
    if (std::abs(std::sqrt(p0 + p1) - block_norm) > kBlockNormTolerance) {
      throw NonFrqiStateError("position " + std::to_string(i) + " has block norm " +
                              std::to_string(std::sqrt(p0 + p1)) + ", expected " +
                              std::to_string(block_norm));
    }
    angles[i] = std::clamp(std::atan2(std::sqrt(p1), std::sqrt(p0)), 0.0, kHalfPi);
  }
  return AngleMap(std::size_t{1} << layout.n, std::move(angles));
}

SampledAngles decode_sampled(const qsim::QuantumState& state, const FrqiLayout& layout,
                             std::uint64_t shots, std::uint64_t seed) {
  check_layout(state, layout);
  if (shots == 0) throw InvalidArgumentError("decode_sampled needs at least one shot");
  const std::size_t pixels = std::size_t{1} << (2 * layout.n);
  const auto probabilities = marginal_probabilities(state, layout);

  std::mt19937_64 rng(seed);
  std::discrete_distribution<std::size_t> outcome(probabilities.begin(), probabilities.end());
  std::vector<std::uint64_t> ones(pixels, 0);
  std::vector<std::uint64_t> hits(pixels, 0);
  for (std::uint64_t s = 0; s < shots; ++s) {
    const std::size_t o = outcome(rng);
    const std::size_t position = o % pixels;
    ++hits[position];
    if (o >= pixels) ++ones[position];
  }

  SampledAngles result;
  result.shots = shots;
  result.sampled.assign(pixels, false);
  std::vector<double> angles(pixels, 0.0);
  for (std::size_t i = 0; i < pixels; ++i) {
    if (hits[i] == 0) continue;
    result.sampled[i] = true;
    const double fraction = static_cast<double>(ones[i]) / static_cast<double>(hits[i]);
    angles[i] = std::asin(std::sqrt(fraction));
  }
  result.angles = AngleMap(std::size_t{1} << layout.n, std::move(angles));
  return result;
}

}  // namespace frqi::codec
