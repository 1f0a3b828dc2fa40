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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "frqi/codec/frqi.hpp"
#include "frqi/error.hpp"
#include "frqi/qsim/simulator.hpp"
#include "support.hpp"

namespace frqi::codec {
namespace {

constexpr double kHalfPi = std::numbers::pi / 2;

TEST(Image, RequiresPowerOfTwoSide) {
  EXPECT_THROW(GrayImage(3), InvalidArgumentError);
  EXPECT_THROW(GrayImage(2, std::vector<std::uint8_t>(3)), InvalidArgumentError);
  EXPECT_EQ(GrayImage(1).exponent(), 0u);
  EXPECT_EQ(GrayImage(8).exponent(), 3u);
  EXPECT_THROW(AngleMap(2, {0.0, 0.1, 2.0, 0.0}), InvalidArgumentError);
  EXPECT_THROW(AngleMap(2, {0.0, -0.1, 0.0, 0.0}), InvalidArgumentError);
  EXPECT_DOUBLE_EQ(AngleMap(1, {kHalfPi + 1e-12})[0], kHalfPi);
}

TEST(GrayAngle, Endpoints) {
  EXPECT_EQ(gray_to_angle(0), 0.0);
  EXPECT_DOUBLE_EQ(gray_to_angle(255), kHalfPi);
  EXPECT_NEAR(gray_to_angle(128), 0.788478, 1e-6);
  EXPECT_EQ(angle_to_gray(0.0), 0);
  EXPECT_EQ(angle_to_gray(kHalfPi), 255);
  EXPECT_EQ(angle_to_gray(kHalfPi * 75 / 255), 75);
}

TEST(GrayAngle, RoundsHalfUpAndClamps) {
  EXPECT_EQ(angle_to_gray(kHalfPi * 74.5 / 255), 75);
  EXPECT_EQ(angle_to_gray(kHalfPi * 74.49 / 255), 74);
  EXPECT_EQ(angle_to_gray(2.0), 255);
  EXPECT_EQ(angle_to_gray(-0.5), 0);
}

TEST(GrayAngle, RoundTripsEveryLevel) {
  for (int g = 0; g < 256; ++g) {
    EXPECT_EQ(angle_to_gray(gray_to_angle(static_cast<std::uint8_t>(g))), g);
  }
  std::mt19937_64 rng(1);
  const GrayImage img = testing::random_image(16, rng);
  EXPECT_EQ(angles_to_image(image_to_angles(img)), img);
}

TEST(Encode, AllZeroImageIsUniformSuperposition) {
  const auto enc = encode_frqi(image_to_angles(GrayImage(2, 0)));
  ASSERT_EQ(enc.state.num_qubits(), 3u);
  for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(enc.state[i].real(), 0.5, 1e-12);
  for (std::size_t i = 4; i < 8; ++i) EXPECT_NEAR(std::abs(enc.state[i]), 0.0, 1e-12);
}

TEST(Encode, AllWhiteImageRotatesEveryColorToOne) {
  const auto enc = encode_frqi(image_to_angles(GrayImage(2, 255)));
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_NEAR(std::abs(enc.state[i]), 0.0, 1e-12);
    EXPECT_NEAR(enc.state[4 + i].real(), 0.5, 1e-12);
  }
}

TEST(Encode, AmplitudesFollowAngles) {
  const AngleMap angles(2, {0.1, 0.5, 1.0, 1.5});
  const auto enc = encode_frqi(angles);
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_NEAR(enc.state[i].real(), std::cos(angles[i]) / 2, 1e-12);
    EXPECT_NEAR(enc.state[4 + i].real(), std::sin(angles[i]) / 2, 1e-12);
  }
}

TEST(Encode, PreparationCircuitMatchesDirectState) {
  std::mt19937_64 rng(8);
  for (std::size_t side : {1, 2, 4, 8}) {
    const AngleMap angles = image_to_angles(testing::random_image(side, rng));
    const auto enc = encode_frqi(angles);
    const auto prepared = qsim::apply_circuit(qsim::QuantumState(enc.circuit.num_qubits()),
                                              enc.circuit);
    EXPECT_LT(prepared.max_abs_diff(enc.state), 1e-9) << side;
    EXPECT_LT(prepared.max_abs_diff(frqi_state(angles)), 1e-9);
  }
}

TEST(Encode, CircuitShape) {
  const auto c = preparation_circuit(AngleMap(4, 0.3));
  std::size_t h = 0, cry = 0;
  for (const auto& g : c.gates()) {
    if (g.kind() == qsim::GateKind::kHadamard) ++h;
    if (g.kind() == qsim::GateKind::kControlledRy) {
      ++cry;
      EXPECT_EQ(g.num_controls(), 4u);
      EXPECT_DOUBLE_EQ(g.angle(), 0.6);
    }
  }
  EXPECT_EQ(h, 4u);
  EXPECT_EQ(cry, 16u);
  EXPECT_THROW(encode_frqi(AngleMap(8, 0.1), qsim::SimConfig{6}), BudgetExceededError);
}

TEST(Decode, ExactRoundTrip) {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 10; ++t) {
    std::uniform_real_distribution<double> u(0.0, kHalfPi);
    std::vector<double> a(16);
    for (auto& v : a) v = u(rng);
    const AngleMap angles(4, a);
    EXPECT_LT(decode_exact(frqi_state(angles), FrqiLayout::canonical(2)).max_abs_diff(angles), 1e-9);
  }
  const auto white = decode_exact(frqi_state(AngleMap(2, kHalfPi)), FrqiLayout::canonical(1));
  for (double v : white.angles()) EXPECT_NEAR(v, kHalfPi, 1e-12);
}

TEST(Decode, HandBuiltAmplitudes) {
  // 2x2 image, pixels 1 and 2 set by hand.
  std::vector<qsim::Amplitude> amps(8);
  const double t1 = 0.4, t2 = 1.2;
  amps[0] = 0.5;
  amps[1] = 0.5 * std::cos(t1);
  amps[5] = 0.5 * std::sin(t1);
  amps[2] = 0.5 * std::cos(t2);
  amps[6] = 0.5 * std::sin(t2);
  amps[3] = 0.5;
  const auto s = qsim::QuantumState::from_amplitudes(3, amps);
  const auto a = decode_exact(s, FrqiLayout::canonical(1));
  EXPECT_NEAR(a[0], 0.0, 1e-12);
  EXPECT_NEAR(a[1], t1, 1e-12);
  EXPECT_NEAR(a[2], t2, 1e-12);
  EXPECT_NEAR(a[3], 0.0, 1e-12);
}

TEST(Decode, RejectsNonFrqiState) {
  EXPECT_THROW(decode_exact(qsim::QuantumState(3), FrqiLayout::canonical(1)), NonFrqiStateError);
  EXPECT_THROW(decode_exact(qsim::QuantumState(2), FrqiLayout::canonical(1)), Error);
}

TEST(DecodeSampled, DeterministicOutcomes) {
  const auto zero = decode_sampled(frqi_state(AngleMap(2, 0.0)), FrqiLayout::canonical(1), 500, 3);
  for (double v : zero.angles.angles()) EXPECT_EQ(v, 0.0);
  const auto white = decode_sampled(frqi_state(AngleMap(2, kHalfPi)), FrqiLayout::canonical(1), 4096, 3);
  for (double v : white.angles.angles()) EXPECT_NEAR(v, kHalfPi, 1e-12);
  for (bool s : white.sampled) EXPECT_TRUE(s);
  EXPECT_THROW(decode_sampled(frqi_state(AngleMap(2, 0.0)), FrqiLayout::canonical(1), 0, 1),
               InvalidArgumentError);
}

TEST(DecodeSampled, SinglePixelQuarterTurn) {
  const auto s = frqi_state(AngleMap(1, {kHalfPi / 2}));
  int within = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto r = decode_sampled(s, FrqiLayout::canonical(0), 100000, seed);
    if (std::abs(r.angles[0] - kHalfPi / 2) < 0.02) ++within;
  }
  EXPECT_GE(within, 99);
}

TEST(DecodeSampled, UnsampledPositionsAreFlagged) {
  const auto r = decode_sampled(frqi_state(AngleMap(8, 0.7)), FrqiLayout::canonical(3), 1, 5);
  int sampled = 0;
  for (bool s : r.sampled) sampled += s ? 1 : 0;
  EXPECT_EQ(sampled, 1);
  EXPECT_EQ(r.shots, 1u);
}

TEST(DecodeSampled, SameSeedSameAnswer) {
  const auto s = frqi_state(AngleMap(4, 0.9));
  const auto a = decode_sampled(s, FrqiLayout::canonical(2), 2000, 42);
  const auto b = decode_sampled(s, FrqiLayout::canonical(2), 2000, 42);
  EXPECT_EQ(a.angles.max_abs_diff(b.angles), 0.0);
}

TEST(DecodeSampled, ErrorShrinksOverShotDecades) {
  std::mt19937_64 rng(77);
  const AngleMap angles = image_to_angles(testing::random_image(4, rng));
  const auto state = frqi_state(angles);
  double previous = 1e9;
  for (std::uint64_t shots : {100, 1000, 10000, 100000}) {
    double total = 0.0;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const auto r = decode_sampled(state, FrqiLayout::canonical(2), shots, seed);
      for (std::size_t i = 0; i < angles.size(); ++i) total += std::abs(r.angles[i] - angles[i]);
    }
    const double mean = total / (20.0 * static_cast<double>(angles.size()));
    EXPECT_LT(mean, previous) << shots;
    previous = mean;
  }
}

}  // namespace
}  // namespace frqi::codec
