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

#include <random>

#include "frqi/error.hpp"
#include "frqi/oracle/classical.hpp"
#include "support.hpp"

namespace frqi::oracle {
namespace {

using interp::WeightMode;

TEST(WeightSet, Examples) {
  const auto a = weight_set(0, 0, 1);
  EXPECT_EQ(a.w[0], (Rational{1, 1}));
  EXPECT_EQ(a.w[1], (Rational{0, 1}));
  const auto b = weight_set(1, 1, 1);
  for (const auto& w : b.w) EXPECT_EQ(w, (Rational{1, 4}));
  const auto c = weight_set(1, 2, 2);
  EXPECT_EQ(c.w[0], (Rational{6, 16}));
  EXPECT_EQ(c.w[1], (Rational{2, 16}));
  EXPECT_EQ(c.w[2], (Rational{6, 16}));
  EXPECT_EQ(c.w[3], (Rational{2, 16}));
  EXPECT_THROW(weight_set(2, 0, 1), InvalidArgumentError);
}

TEST(WeightSet, StandardSumsToOneExactly) {
  for (unsigned m = 1; m <= 5; ++m) {
    const std::uint64_t r = std::uint64_t{1} << m;
    for (std::uint64_t y = 0; y < r; ++y) {
      for (std::uint64_t x = 0; x < r; ++x) EXPECT_EQ(weight_set(x, y, m).sum(), (Rational{1, 1}));
    }
  }
}

TEST(WeightSet, PaperLiteralDoesNotSumToOne) {
  EXPECT_FALSE(weight_set(1, 1, 1, WeightMode::kPaperLiteral).sum() == (Rational{1, 1}));
  EXPECT_EQ(weight_set(1, 1, 1, WeightMode::kPaperLiteral).w[1], (Rational{1, 2}));
}

TEST(Rational, ReducesAndAdds) {
  EXPECT_EQ((Rational{6, 16}.reduced().num), 3);
  EXPECT_EQ((Rational{6, 16}.reduced().den), 8);
  const Rational s = Rational{1, 4} + Rational{1, 6};
  EXPECT_EQ(s.num, 5);
  EXPECT_EQ(s.den, 12);
}

TEST(BilinearUpscale, Examples) {
  const GrayImage img = testing::image_from(2, {0, 100, 50, 150});
  const GrayImage out = bilinear_upscale(img, 1);
  EXPECT_EQ(out.side(), 4u);
  EXPECT_EQ(out.at(1, 1), 75);
  EXPECT_EQ(out.at(0, 0), 0);
  EXPECT_EQ(out.at(2, 0), 100);
  EXPECT_EQ(out.at(0, 2), 50);
  EXPECT_EQ(out.at(2, 2), 150);
  const GrayImage flat = bilinear_upscale(GrayImage(4, 77), 2);
  for (auto p : flat.pixels()) EXPECT_EQ(p, 77);
}

TEST(BilinearUpscale, RoundsHalfUp) {
  // (0 + 1) / 2 = 0.5 rounds to 1.
  const GrayImage img = testing::image_from(2, {0, 1, 0, 1});
  EXPECT_EQ(bilinear_upscale(img, 1).at(1, 0), 1);
}

TEST(BilinearUpscale, AnchorsKeepSourcePixels) {
  std::mt19937_64 rng(8);
  const GrayImage img = testing::random_image(8, rng);
  for (unsigned m : {1u, 2u}) {
    EXPECT_EQ(subsample(bilinear_upscale(img, m), m), img);
  }
}

TEST(NearestUpscale, BlocksAndRightInverse) {
  const GrayImage img = testing::image_from(2, {0, 100, 50, 150});
  const GrayImage out = nearest_upscale(img, 1);
  EXPECT_EQ(out.at(0, 0), 0);
  EXPECT_EQ(out.at(1, 1), 0);
  EXPECT_EQ(out.at(3, 0), 100);
  EXPECT_EQ(out.at(0, 3), 50);
  EXPECT_EQ(out.at(3, 3), 150);
  std::mt19937_64 rng(3);
  const GrayImage r = testing::random_image(8, rng);
  EXPECT_EQ(subsample(nearest_upscale(r, 2), 2), r);
  EXPECT_EQ(nearest_upscale(GrayImage(2, 9), 3), GrayImage(16, 9));
}

TEST(AverageDownscale, Examples) {
  std::vector<int> g(16, 200);
  g[0] = 0;
  g[2] = 40;
  g[8] = 80;
  g[10] = 120;
  const GrayImage out = average_downscale(testing::image_from(4, g), 1);
  EXPECT_EQ(out.at(0, 0), 60);
  // (1, 1) clamps to the samples (2, 2) four times.
  EXPECT_EQ(out.at(1, 1), 120);
  EXPECT_EQ(average_downscale(GrayImage(8, 33), 1), GrayImage(4, 33));
  EXPECT_THROW(average_downscale(GrayImage(2, 0), 1), InvalidArgumentError);
}

TEST(AverageDownscale, WorkedExampleSamples) {
  std::vector<int> g(64, 255);
  g[4 * 8 + 2] = 10;
  g[4 * 8 + 4] = 20;
  g[6 * 8 + 2] = 30;
  g[6 * 8 + 4] = 40;
  EXPECT_EQ(average_downscale(testing::image_from(8, g), 1).at(1, 2), 25);
}

TEST(Subsample, KeepsAnchors) {
  const GrayImage img = testing::image_from(4, {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16});
  EXPECT_EQ(subsample(img, 1), testing::image_from(2, {1, 3, 9, 11}));
  EXPECT_THROW(subsample(img, 3), InvalidArgumentError);
}

}  // namespace
}  // namespace frqi::oracle
