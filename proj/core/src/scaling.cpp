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

#include "frqi/interp/scaling.hpp"

#include <string>

#include "frqi/codec/frqi.hpp"
#include "frqi/error.hpp"
#include "frqi/interp/modules.hpp"
#include "frqi/qsim/decompose.hpp"

namespace frqi::interp {
namespace {

using qsim::Circuit;
using qsim::Gate;
using qsim::Qubit;
using qsim::Register;
using qsim::RegisterRole;

std::vector<Qubit> slice(const Register& r, unsigned begin, unsigned count) {
  std::vector<Qubit> out(count);
  for (unsigned i = 0; i < count; ++i) out[i] = r[begin + i];
  return out;
}

std::vector<Qubit> concat(std::vector<Qubit> a, const std::vector<Qubit>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

void check_ratio(unsigned m) {
  if (m == 0) throw InvalidArgumentError("ratio exponent m must be at least 1");
}

void check_dense(const Circuit& circuit, const BuildOptions& options) {
  if (options.dense) qsim::check_budget(circuit.num_qubits(), options.sim);
}

// Color wire for stage `stage` (1-based). Literal-swap mode alternates
// between the primary and auxiliary wires.
Qubit stage_wire(const Register& color, const std::optional<Register>& aux, int stage) {
  if (!aux || stage % 2 == 1) return color[0];
  return (*aux)[0];
}

void add_stage_swap(Circuit& circuit, const Register& color,
                    const std::optional<Register>& aux) {
  if (!aux) return;
  circuit.begin_block("SWAP");
  circuit.add(Gate::swap(color[0], (*aux)[0]));
  circuit.end_block();
}

void add_prep(Circuit& circuit, const Register& target) {
  circuit.begin_block("PREP");
  for (unsigned q = 0; q < target.size; ++q) circuit.add(Gate::h(target[q]));
  circuit.end_block();
}

template <typename Layout>
Circuit finish(Circuit circuit, Layout& layout, const BuildOptions& options) {
  if (options.decompose) {
    circuit = qsim::decompose_circuit(circuit);
    layout.work = circuit.find_register("work");
  }
  check_dense(circuit, options);
  return circuit;
}

}  // namespace

const char* to_string(SwapMode mode) {
  return mode == SwapMode::kAccumulate ? "accumulate" : "literal";
}

std::vector<Qubit> UpscaleLayout::offset_qubits() const {
  const unsigned width = n + m;
  return concat(slice(target, 0, m), slice(target, width, m));
}

codec::FrqiLayout UpscaleLayout::output_layout() const {
  return codec::FrqiLayout{n + m, target.start, color[0]};
}

std::vector<Qubit> DownscaleLayout::source_qubits(int which) const {
  const Register& s = samples.at(static_cast<std::size_t>(which));
  auto x = concat(slice(low_bits, 0, m), slice(s, 0, n));
  auto y = concat(slice(low_bits, m, m), slice(s, n, n));
  return concat(std::move(x), y);
}

codec::FrqiLayout DownscaleLayout::output_layout() const {
  return codec::FrqiLayout{n, target.start, color[0]};
}

unsigned upscale_qubits(unsigned n, unsigned m, SwapMode swap) {
  return 2 * (n + m) + 8 * n + 1 + (swap == SwapMode::kLiteralSwap ? 1 : 0);
}

unsigned downscale_qubits(unsigned n, unsigned m, SwapMode swap) {
  return 2 * n + 8 * n + 2 * m + 1 + (swap == SwapMode::kLiteralSwap ? 1 : 0);
}

UpscaleCircuit build_upscale_circuit(const AngleMap& source, unsigned m,
                                     const BuildOptions& options) {
  check_ratio(m);
  const unsigned n = source.exponent();
  if (n == 0) throw InvalidArgumentError("up-scaling needs a source of at least 2x2");
  if (options.dense) qsim::check_budget(upscale_qubits(n, m, options.swap), options.sim);
  const unsigned width = n + m;

  Circuit circuit;
  UpscaleLayout layout;
  layout.n = n;
  layout.m = m;
  layout.target = circuit.add_register("target", RegisterRole::kTargetPosition, 2 * width);
  for (int i = 0; i < 4; ++i) {
    layout.neighbors[static_cast<std::size_t>(i)] = circuit.add_register(
        "neighbor" + std::to_string(i + 1), RegisterRole::kNeighborPosition, 2 * n);
  }
  layout.color = circuit.add_register("color", RegisterRole::kColor, 1);
  if (options.swap == SwapMode::kLiteralSwap) {
    layout.aux_color = circuit.add_register("color_aux", RegisterRole::kColor, 1);
  }

  const auto x_high = slice(layout.target, m, n);
  const auto y_high = slice(layout.target, width + m, n);
  auto x_of = [&](int i) { return slice(layout.neighbors[static_cast<std::size_t>(i)], 0, n); };
  auto y_of = [&](int i) { return slice(layout.neighbors[static_cast<std::size_t>(i)], n, n); };

  add_prep(circuit, layout.target);

  // Step 1: (X, Y).
  circuit.append(build_pa(x_high, x_of(0)), "PA");
  circuit.append(build_pa(y_high, y_of(0)), "PA");
  // Step 2: (X+1, Y), (X, Y+1), (X+1, Y+1).
  circuit.append(build_omega(x_high, x_of(1)), "OMEGA-X");
  circuit.append(build_pa(y_high, y_of(1)), "PA");
  circuit.append(build_pa(x_high, x_of(2)), "PA");
  circuit.append(build_omega(y_high, y_of(2)), "OMEGA-Y");
  circuit.append(build_pa(x_of(1), x_of(3)), "PA");
  circuit.append(build_pa(y_of(2), y_of(3)), "PA");

  // Step 3: weighted accumulation.
  const auto offset = layout.offset_qubits();
  for (int i = 1; i <= 4; ++i) {
    const auto neighbor = layout.neighbors[static_cast<std::size_t>(i - 1)].qubits();
    const Qubit wire = stage_wire(layout.color, layout.aux_color, i);
    const std::string tag = std::to_string(i);
    if (options.fused) {
      circuit.append(build_fused_ca_wa(offset, neighbor, wire, source, i, options.weights),
                     "CAWA-" + tag);
    } else {
      circuit.append(build_ca(neighbor, wire, source), "CA-" + tag);
      circuit.append(build_wa(offset, neighbor, wire, source, i, options.weights), "WA-" + tag);
    }
    add_stage_swap(circuit, layout.color, layout.aux_color);
  }

  circuit = finish(std::move(circuit), layout, options);
  return UpscaleCircuit{std::move(circuit), std::move(layout)};
}

UpscaleCircuit build_upscale_circuit(const GrayImage& source, unsigned m,
                                     const BuildOptions& options) {
  return build_upscale_circuit(codec::image_to_angles(source), m, options);
}

DownscaleCircuit build_downscale_circuit(const AngleMap& source, unsigned m,
                                         const BuildOptions& options) {
  check_ratio(m);
  const unsigned bits = source.exponent();
  if (bits < m + 1) {
    throw InvalidArgumentError("down-scaling by 2^" + std::to_string(m) +
                               " needs a source side of at least " +
                               std::to_string(std::size_t{1} << (m + 1)));
  }
  const unsigned n = bits - m;
  if (options.dense) qsim::check_budget(downscale_qubits(n, m, options.swap), options.sim);

  Circuit circuit;
  DownscaleLayout layout;
  layout.n = n;
  layout.m = m;
  layout.target = circuit.add_register("target", RegisterRole::kTargetPosition, 2 * n);
  for (int i = 0; i < 4; ++i) {
    layout.samples[static_cast<std::size_t>(i)] = circuit.add_register(
        "sample" + std::to_string(i + 1), RegisterRole::kNeighborPosition, 2 * n);
  }
  layout.low_bits = circuit.add_register("low_bits", RegisterRole::kOffset, 2 * m);
  layout.color = circuit.add_register("color", RegisterRole::kColor, 1);
  if (options.swap == SwapMode::kLiteralSwap) {
    layout.aux_color = circuit.add_register("color_aux", RegisterRole::kColor, 1);
  }

  const auto x_target = slice(layout.target, 0, n);
  const auto y_target = slice(layout.target, n, n);
  auto x_of = [&](int i) { return slice(layout.samples[static_cast<std::size_t>(i)], 0, n); };
  auto y_of = [&](int i) { return slice(layout.samples[static_cast<std::size_t>(i)], n, n); };

  add_prep(circuit, layout.target);

  // Step 1: P1 = (X' 2^m, Y' 2^m); the low 2m bits stay |0>.
  circuit.append(build_pa(x_target, x_of(0)), "PA");
  circuit.append(build_pa(y_target, y_of(0)), "PA");
  // Step 2: P2..P4, Omega on the n high bits only.
  circuit.append(build_omega(x_target, x_of(1)), "OMEGA-X");
  circuit.append(build_pa(y_target, y_of(1)), "PA");
  circuit.append(build_pa(x_target, x_of(2)), "PA");
  circuit.append(build_omega(y_target, y_of(2)), "OMEGA-Y");
  circuit.append(build_pa(x_of(1), x_of(3)), "PA");
  circuit.append(build_pa(y_of(2), y_of(3)), "PA");

  // Step 3: quarter contributions.
  for (int i = 1; i <= 4; ++i) {
    const Qubit wire = stage_wire(layout.color, layout.aux_color, i);
    circuit.append(build_quarter(layout.source_qubits(i - 1), wire, source, m),
                   "QUARTER-" + std::to_string(i));
    add_stage_swap(circuit, layout.color, layout.aux_color);
  }

  circuit = finish(std::move(circuit), layout, options);
  return DownscaleCircuit{std::move(circuit), std::move(layout)};
}

DownscaleCircuit build_downscale_circuit(const GrayImage& source, unsigned m,
                                         const BuildOptions& options) {
  return build_downscale_circuit(codec::image_to_angles(source), m, options);
}

}  // namespace frqi::interp
