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
#include <cstdint>

#include "frqi/image.hpp"
#include "frqi/interp/weights.hpp"

// Classical reference implementations. They share no code with the circuit
// builders or the structured backend beyond the gray <-> angle conversion.
namespace frqi::oracle {

/// Exact non-negative rational num / den.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  Rational reduced() const;

  friend Rational operator+(Rational a, Rational b);
  friend bool operator==(Rational a, Rational b);
};

struct WeightSet {
  std::array<Rational, 4> w;
  std::uint64_t x = 0;
  std::uint64_t y = 0;
  unsigned m = 0;

  Rational sum() const;
};

/// Throws InvalidArgumentError unless 0 <= x, y < 2^m.
WeightSet weight_set(std::uint64_t x, std::uint64_t y, unsigned m,
                     interp::WeightMode mode = interp::WeightMode::kStandard);

/// Bilinear up-scaling by 2^m per axis, computed in the angle domain with a
/// single final quantization. Neighbors past the last row/column clamp.
GrayImage bilinear_upscale(const GrayImage& image, unsigned m,
                           interp::WeightMode mode = interp::WeightMode::kStandard);

/// Nearest-neighbor up-scaling: (X', Y') takes (X' >> m, Y' >> m).
GrayImage nearest_upscale(const GrayImage& image, unsigned m);

/// Quarter-sum of the four pixels sampled at multiples of 2^m (clamped).
/// Throws InvalidArgumentError if side < 2^(m+1).
GrayImage average_downscale(const GrayImage& image, unsigned m);

/// Keeps the pixel at every 2^m-th row and column (block anchors).
GrayImage subsample(const GrayImage& image, unsigned m);

}  // namespace frqi::oracle
