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

#include "frqi/structured.hpp"

#include <algorithm>
#include <numbers>
#include <string>
#include <vector>

#include "frqi/error.hpp"
#include "frqi/interp/coordinates.hpp"

namespace frqi::structured {

using interp::PixelCoord;

AngleMap upscale_structured(const AngleMap& angles, unsigned m, interp::WeightMode mode) {
  const unsigned n = angles.exponent();
  const std::size_t side = angles.side() << m;
  std::vector<double> out(side * side);
  for (std::size_t y = 0; y < side; ++y) {
    for (std::size_t x = 0; x < side; ++x) {
      const PixelCoord target{x, y};
      const auto neighbors = interp::upscale_neighbors(target, n, m);
      const auto offset = interp::upscale_offset(target, m);
      const auto w = interp::bilinear_weights(offset.x, offset.y, m, mode);
      double sum = 0.0;
      for (std::size_t i = 0; i < 4; ++i) sum += w[i] * angles.at(neighbors[i].x, neighbors[i].y);
      out[y * side + x] = std::min(sum, std::numbers::pi / 2);
    }
  }
  return AngleMap(side, std::move(out));
}

AngleMap downscale_structured(const AngleMap& angles, unsigned m) {
  const unsigned bits = angles.exponent();
  if (bits < m + 1) {
    throw InvalidArgumentError("down-scaling by 2^" + std::to_string(m) + " needs a side of at least " +
                               std::to_string(std::size_t{1} << (m + 1)));
  }
  const unsigned n = bits - m;
  const std::size_t side = std::size_t{1} << n;
  std::vector<double> out(side * side);
  for (std::size_t y = 0; y < side; ++y) {
    for (std::size_t x = 0; x < side; ++x) {
      double sum = 0.0;
      for (const auto& p : interp::downscale_samples({x, y}, n, m)) sum += angles.at(p.x, p.y) / 4.0;
      out[y * side + x] = sum;
    }
  }
  return AngleMap(side, std::move(out));
}

}  // namespace frqi::structured
