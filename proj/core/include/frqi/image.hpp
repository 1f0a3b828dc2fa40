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
#include <span>
#include <vector>

namespace frqi {

/// True if `value` is 2^k for some k >= 0.
constexpr bool is_power_of_two(std::uint64_t value) {
  return value != 0 && (value & (value - 1)) == 0;
}

/// log2 of a power of two.
unsigned log2_exact(std::uint64_t value);

/// 8-bit grayscale raster with power-of-two square side, row-major with the
/// origin at the top-left. Pixel (x, y) lives at index y * side + x.
class GrayImage {
 public:
  GrayImage() = default;
  /// Constant image. Throws InvalidArgumentError unless side is 2^s.
  explicit GrayImage(std::size_t side, std::uint8_t fill = 0);
  GrayImage(std::size_t side, std::vector<std::uint8_t> pixels);

  std::size_t side() const noexcept { return side_; }
  /// log2(side).
  unsigned exponent() const noexcept { return exponent_; }
  std::size_t size() const noexcept { return pixels_.size(); }

  std::uint8_t at(std::size_t x, std::size_t y) const { return pixels_[y * side_ + x]; }
  std::uint8_t& at(std::size_t x, std::size_t y) { return pixels_[y * side_ + x]; }

  std::span<const std::uint8_t> pixels() const noexcept { return pixels_; }
  std::span<std::uint8_t> pixels() noexcept { return pixels_; }

  friend bool operator==(const GrayImage&, const GrayImage&) = default;

 private:
  std::size_t side_ = 0;
  unsigned exponent_ = 0;
  std::vector<std::uint8_t> pixels_;
};

/// Per-pixel FRQI color angle in [0, pi/2], same indexing as GrayImage.
class AngleMap {
 public:
  AngleMap() = default;
  explicit AngleMap(std::size_t side, double fill = 0.0);
  /// Throws InvalidArgumentError on a bad side or an angle outside
  /// [0, pi/2] (a 1e-9 slack is clamped away).
  AngleMap(std::size_t side, std::vector<double> angles);

  std::size_t side() const noexcept { return side_; }
  unsigned exponent() const noexcept { return exponent_; }
  std::size_t size() const noexcept { return angles_.size(); }

  double at(std::size_t x, std::size_t y) const { return angles_[y * side_ + x]; }
  double operator[](std::size_t index) const { return angles_[index]; }

  std::span<const double> angles() const noexcept { return angles_; }

  /// Largest per-angle absolute difference; sides must agree.
  double max_abs_diff(const AngleMap& other) const;

 private:
  std::size_t side_ = 0;
  unsigned exponent_ = 0;
  std::vector<double> angles_;
};

}  // namespace frqi
