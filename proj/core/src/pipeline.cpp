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

#include "frqi/pipeline.hpp"

#include "frqi/codec/frqi.hpp"
#include "frqi/qsim/simulator.hpp"

namespace frqi {

AngleMap decode_output(const qsim::QuantumState& state, const codec::FrqiLayout& layout,
                       const DecodeOptions& decode) {
  if (decode.shots) return codec::decode_sampled(state, layout, *decode.shots, decode.seed).angles;
  return codec::decode_exact(state, layout);
}

AngleMap dense_upscale(const AngleMap& source, unsigned m, const interp::BuildOptions& options,
                       const DecodeOptions& decode) {
  interp::BuildOptions opts = options;
  opts.dense = true;
  const auto built = interp::build_upscale_circuit(source, m, opts);
  qsim::QuantumState state(built.circuit.num_qubits(), opts.sim);
  qsim::apply_circuit_in_place(state, built.circuit);
  return decode_output(state, built.layout.output_layout(), decode);
}

AngleMap dense_downscale(const AngleMap& source, unsigned m, const interp::BuildOptions& options,
                         const DecodeOptions& decode) {
  interp::BuildOptions opts = options;
  opts.dense = true;
  const auto built = interp::build_downscale_circuit(source, m, opts);
  qsim::QuantumState state(built.circuit.num_qubits(), opts.sim);
  qsim::apply_circuit_in_place(state, built.circuit);
  return decode_output(state, built.layout.output_layout(), decode);
}

}  // namespace frqi
