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

#include "frqi/image.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <string>

#include "frqi/error.hpp"

namespace frqi {
namespace {

unsigned checked_exponent(std::size_t side) {
  if (!is_power_of_two(side)) {
    throw InvalidArgumentError("image side " + std::to_string(side) +
                               " is not a power of two");
  }
  return log2_exact(side);
}

}  // namespace

unsigned log2_exact(std::uint64_t value) {
  return static_cast<unsigned>(std::countr_zero(value));
}

GrayImage::GrayImage(std::size_t side, std::uint8_t fill)
    : side_(side), exponent_(checked_exponent(side)), pixels_(side * side, fill) {}

GrayImage::GrayImage(std::size_t side, std::vector<std::uint8_t> pixels)
    : side_(side), exponent_(checked_exponent(side)), pixels_(std::move(pixels)) {
  if (pixels_.size() != side * side) {
    throw InvalidArgumentError("expected " + std::to_string(side * side) + " pixels, got " +
                               std::to_string(pixels_.size()));
  }
}

AngleMap::AngleMap(std::size_t side, double fill)
    : AngleMap(side, std::vector<double>(side * side, fill)) {}

AngleMap::AngleMap(std::size_t side, std::vector<double> angles)
    : side_(side), exponent_(checked_exponent(side)), angles_(std::move(angles)) {
  if (angles_.size() != side * side) {
    throw InvalidArgumentError("expected " + std::to_string(side * side) + " angles, got " +
                               std::to_string(angles_.size()));
  }
  constexpr double kHalfPi = std::numbers::pi / 2.0;
  constexpr double kSlack = 1e-9;
  for (double& a : angles_) {
    if (!(a >= -kSlack && a <= kHalfPi + kSlack)) {
      throw InvalidArgumentError("color angle " + std::to_string(a) +
                                 " outside [0, pi/2]");
    }
    a = std::clamp(a, 0.0, kHalfPi);
  }
}

double AngleMap::max_abs_diff(const AngleMap& other) const {
  if (other.side_ != side_) throw InvalidArgumentError("angle map side mismatch");
  double worst = 0.0;
  for (std::size_t i = 0; i < angles_.size(); ++i) {
    worst = std::max(worst, std::abs(angles_[i] - other.angles_[i]));
  }
  return worst;
}

}  // namespace frqi
