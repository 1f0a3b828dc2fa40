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
#include <cstddef>

namespace frqi::interp {

struct PixelCoord {
  std::size_t x = 0;
  std::size_t y = 0;

  friend bool operator==(const PixelCoord&, const PixelCoord&) = default;
};

/// Source cell (X, Y) = (X' >> m, Y' >> m) of an up-scaling target.
PixelCoord upscale_anchor(PixelCoord target, unsigned m);

/// Offset (x, y) = (X' mod 2^m, Y' mod 2^m) of an up-scaling target.
PixelCoord upscale_offset(PixelCoord target, unsigned m);

/// The four neighbors (X,Y), (X+1,Y), (X,Y+1), (X+1,Y+1) of a target in a
/// 2^(n+m) image up-scaled from 2^n; +1 saturates at 2^n - 1.
std::array<PixelCoord, 4> upscale_neighbors(PixelCoord target, unsigned n, unsigned m);

/// The four sampled source pixels of a down-scaling target (X', Y') in a
/// 2^n image reduced from 2^(n+m): (X'·2^m, Y'·2^m), ((X'+1)·2^m, Y'·2^m),
/// (X'·2^m, (Y'+1)·2^m), ((X'+1)·2^m, (Y'+1)·2^m) with X'+1, Y'+1 saturating
/// at 2^n - 1.
std::array<PixelCoord, 4> downscale_samples(PixelCoord target, unsigned n, unsigned m);

}  // namespace frqi::interp
