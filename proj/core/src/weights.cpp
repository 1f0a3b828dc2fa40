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

#include "frqi/interp/weights.hpp"

#include <cmath>
#include <string>

#include "frqi/error.hpp"

namespace frqi::interp {

const char* to_string(WeightMode mode) {
  return mode == WeightMode::kStandard ? "standard" : "paper";
}

double bilinear_weight(int which, std::size_t x, std::size_t y, unsigned m, WeightMode mode) {
  const double r = std::ldexp(1.0, static_cast<int>(m));
  if (static_cast<double>(x) >= r || static_cast<double>(y) >= r) {
    throw InvalidArgumentError("offset (" + std::to_string(x) + ", " + std::to_string(y) +
                               ") outside a 2^" + std::to_string(m) + " cell");
  }
  const double dx = static_cast<double>(x);
  const double dy = static_cast<double>(y);
  switch (which) {
    case 1:
      return (r - dx) * (r - dy) / (r * r);
    case 2:
      return mode == WeightMode::kStandard ? dx * (r - dy) / (r * r) : (r - dx) / r;
    case 3:
      return mode == WeightMode::kStandard ? (r - dx) * dy / (r * r) : (r - dy) / r;
    case 4:
      return dx * dy / (r * r);
    default:
      throw InvalidArgumentError("neighbor index " + std::to_string(which) +
                                 " outside 1..4");
  }
}

std::array<double, 4> bilinear_weights(std::size_t x, std::size_t y, unsigned m,
                                       WeightMode mode) {
  return {bilinear_weight(1, x, y, m, mode), bilinear_weight(2, x, y, m, mode),
          bilinear_weight(3, x, y, m, mode), bilinear_weight(4, x, y, m, mode)};
}

}  // namespace frqi::interp
