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
#include <optional>

#include "frqi/image.hpp"
#include "frqi/interp/scaling.hpp"
#include "frqi/qsim/quantum_state.hpp"

// End-to-end dense runs: build the network, simulate it from |0...0>, and
// read the output image back.
namespace frqi {

struct DecodeOptions {
  /// Exact amplitude readout when empty.
  std::optional<std::uint64_t> shots;
  std::uint64_t seed = 1;
};

AngleMap decode_output(const qsim::QuantumState& state, const codec::FrqiLayout& layout,
                       const DecodeOptions& decode = {});

AngleMap dense_upscale(const AngleMap& source, unsigned m,
                       const interp::BuildOptions& options = {},
                       const DecodeOptions& decode = {});

AngleMap dense_downscale(const AngleMap& source, unsigned m,
                         const interp::BuildOptions& options = {},
                         const DecodeOptions& decode = {});

}  // namespace frqi
