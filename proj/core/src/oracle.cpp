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

#include "frqi/oracle/classical.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "frqi/error.hpp"

namespace frqi::oracle {
namespace {

using interp::WeightMode;

std::uint8_t round_half_up(std::int64_t num, std::int64_t den) {
  const std::int64_t level = (2 * num + den) / (2 * den);
  return static_cast<std::uint8_t>(std::clamp<std::int64_t>(level, 0, 255));
}

std::size_t next_clamped(std::size_t v, std::size_t side) { return v + 1 < side ? v + 1 : v; }

}  // namespace

Rational Rational::reduced() const {
  const std::int64_t g = std::gcd(num, den);
  if (g == 0) return {0, 1};
  return {num / g, den / g};
}

Rational operator+(Rational a, Rational b) {
  return Rational{a.num * b.den + b.num * a.den, a.den * b.den}.reduced();
}

bool operator==(Rational a, Rational b) { return a.num * b.den == b.num * a.den; }

Rational WeightSet::sum() const { return w[0] + w[1] + w[2] + w[3]; }

WeightSet weight_set(std::uint64_t x, std::uint64_t y, unsigned m, WeightMode mode) {
  if (m > 30) throw InvalidArgumentError("ratio exponent too large for exact weights");
  const auto r = static_cast<std::int64_t>(std::uint64_t{1} << m);
  if (x >= static_cast<std::uint64_t>(r) || y >= static_cast<std::uint64_t>(r)) {
    throw InvalidArgumentError("offset outside the 2^m cell");
  }
  const auto dx = static_cast<std::int64_t>(x);
  const auto dy = static_cast<std::int64_t>(y);
  const std::int64_t den = r * r;
  WeightSet set;
  set.x = x;
  set.y = y;
  set.m = m;
  set.w[0] = {(r - dx) * (r - dy), den};
  set.w[3] = {dx * dy, den};
  if (mode == WeightMode::kStandard) {
    set.w[1] = {dx * (r - dy), den};
    set.w[2] = {(r - dx) * dy, den};
  } else {
    set.w[1] = {(r - dx) * r, den};
    set.w[2] = {(r - dy) * r, den};
  }
  return set;
}

GrayImage bilinear_upscale(const GrayImage& image, unsigned m, WeightMode mode) {
  const std::size_t src = image.side();
  const std::size_t side = src << m;
  const std::size_t mask = (std::size_t{1} << m) - 1;
  GrayImage out(side);
  for (std::size_t y = 0; y < side; ++y) {
    for (std::size_t x = 0; x < side; ++x) {
      const std::size_t x0 = x >> m;
      const std::size_t y0 = y >> m;
      const std::size_t x1 = next_clamped(x0, src);
      const std::size_t y1 = next_clamped(y0, src);
      const WeightSet set = weight_set(x & mask, y & mask, m, mode);
      const std::int64_t g[4] = {image.at(x0, y0), image.at(x1, y0), image.at(x0, y1),
                                 image.at(x1, y1)};
      std::int64_t num = 0;
      for (int i = 0; i < 4; ++i) num += set.w[static_cast<std::size_t>(i)].num * g[i];
      out.at(x, y) = round_half_up(num, set.w[0].den);
    }
  }
  return out;
}

GrayImage nearest_upscale(const GrayImage& image, unsigned m) {
  const std::size_t side = image.side() << m;
  GrayImage out(side);
  for (std::size_t y = 0; y < side; ++y) {
    for (std::size_t x = 0; x < side; ++x) out.at(x, y) = image.at(x >> m, y >> m);
  }
  return out;
}

GrayImage average_downscale(const GrayImage& image, unsigned m) {
  if (image.exponent() < m + 1) {
    throw InvalidArgumentError("down-scaling by 2^" + std::to_string(m) +
                               " needs a side of at least " +
                               std::to_string(std::size_t{1} << (m + 1)));
  }
  const std::size_t step = std::size_t{1} << m;
  const std::size_t side = image.side() / step;
  GrayImage out(side);
  for (std::size_t y = 0; y < side; ++y) {
    for (std::size_t x = 0; x < side; ++x) {
      const std::size_t x0 = x * step;
      const std::size_t y0 = y * step;
      const std::size_t x1 = next_clamped(x, side) * step;
      const std::size_t y1 = next_clamped(y, side) * step;
      const std::int64_t sum = std::int64_t{image.at(x0, y0)} + image.at(x1, y0) +
                               image.at(x0, y1) + image.at(x1, y1);
      out.at(x, y) = round_half_up(sum, 4);
    }
  }
  return out;
}

GrayImage subsample(const GrayImage& image, unsigned m) {
  if (image.exponent() < m) throw InvalidArgumentError("subsampling ratio exceeds the image");
  const std::size_t step = std::size_t{1} << m;
  const std::size_t side = image.side() / step;
  GrayImage out(side);
  for (std::size_t y = 0; y < side; ++y) {
    for (std::size_t x = 0; x < side; ++x) out.at(x, y) = image.at(x * step, y * step);
  }
  return out;
}

}  // namespace frqi::oracle
