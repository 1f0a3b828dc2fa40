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

#include "frqi/interp/coordinates.hpp"

#include <algorithm>

namespace frqi::interp {
namespace {

std::size_t clamped_next(std::size_t v, unsigned bits) {
  const std::size_t last = (std::size_t{1} << bits) - 1;
  return std::min(v + 1, last);
}

}  // namespace

PixelCoord upscale_anchor(PixelCoord target, unsigned m) {
  return {target.x >> m, target.y >> m};
}

PixelCoord upscale_offset(PixelCoord target, unsigned m) {
  const std::size_t mask = (std::size_t{1} << m) - 1;
  return {target.x & mask, target.y & mask};
}

std::array<PixelCoord, 4> upscale_neighbors(PixelCoord target, unsigned n, unsigned m) {
  const PixelCoord a = upscale_anchor(target, m);
  const std::size_t x1 = clamped_next(a.x, n);
  const std::size_t y1 = clamped_next(a.y, n);
  return {PixelCoord{a.x, a.y}, PixelCoord{x1, a.y}, PixelCoord{a.x, y1}, PixelCoord{x1, y1}};
}

std::array<PixelCoord, 4> downscale_samples(PixelCoord target, unsigned n, unsigned m) {
  const std::size_t x0 = target.x << m;
  const std::size_t y0 = target.y << m;
  const std::size_t x1 = clamped_next(target.x, n) << m;
  const std::size_t y1 = clamped_next(target.y, n) << m;
  return {PixelCoord{x0, y0}, PixelCoord{x1, y0}, PixelCoord{x0, y1}, PixelCoord{x1, y1}};
}

}  // namespace frqi::interp
