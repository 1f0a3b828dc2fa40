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

enum class WeightMode {
  /// w1=(R-x)(R-y)/R^2, w2=x(R-y)/R^2, w3=(R-x)y/R^2, w4=xy/R^2 with R=2^m.
  kStandard,
  /// The printed variant: w2=(R-x)/R and w3=(R-y)/R; does not sum to 1.
  kPaperLiteral,
};

const char* to_string(WeightMode mode);

/// Weight of neighbor `which` (1..4, ordered (X,Y), (X+1,Y), (X,Y+1),
/// (X+1,Y+1)) for a target at offset (x, y) inside its 2^m x 2^m cell.
/// Throws InvalidArgumentError if `which` or the offsets are out of range.
double bilinear_weight(int which, std::size_t x, std::size_t y, unsigned m, WeightMode mode);

std::array<double, 4> bilinear_weights(std::size_t x, std::size_t y, unsigned m,
                                       WeightMode mode);

}  // namespace frqi::interp
