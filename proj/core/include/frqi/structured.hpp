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

#include "frqi/image.hpp"
#include "frqi/interp/weights.hpp"

namespace frqi::structured {

/// Angle-per-position simulation of the up-scaling network. Every target
/// pixel gets sum_i w_i theta(neighbor_i) with clamped neighbors; no gray
/// quantization happens here. Paper-literal weights can push the sum past
/// pi/2; such angles saturate at pi/2.
AngleMap upscale_structured(const AngleMap& angles, unsigned m,
                            interp::WeightMode mode = interp::WeightMode::kStandard);

/// Angle-per-position simulation of the down-scaling network:
/// theta'(X', Y') = (theta(P1) + theta(P2) + theta(P3) + theta(P4)) / 4.
/// Throws InvalidArgumentError if side < 2^(m+1).
AngleMap downscale_structured(const AngleMap& angles, unsigned m);

}  // namespace frqi::structured
