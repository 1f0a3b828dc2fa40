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

#include "frqi/interp/modules.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "frqi/error.hpp"

namespace frqi::interp {
namespace {

using qsim::Circuit;
using qsim::Control;
using qsim::Gate;
using qsim::Polarity;
using qsim::Qubit;

void require_disjoint(std::initializer_list<std::span<const Qubit>> groups) {
  std::vector<Qubit> all;
  for (const auto& g : groups) all.insert(all.end(), g.begin(), g.end());
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end()) {
    throw InvalidArgumentError("registers overlap");
  }
}

Circuit circuit_over(std::initializer_list<std::span<const Qubit>> groups) {
  Qubit width = 0;
  for (const auto& g : groups) {
    for (Qubit q : g) width = std::max(width, q + 1);
  }
  return Circuit(width);
}

// Controls matching `value` bit by bit on `qubits`.
void append_value_controls(std::span<const Qubit> qubits, std::uint64_t value,
                           std::vector<Control>& out) {
  for (std::size_t b = 0; b < qubits.size(); ++b) {
    out.push_back({qubits[b], ((value >> b) & 1U) ? Polarity::kOnOne : Polarity::kOnZero});
  }
}

Gate rotation(std::vector<Control> controls, Qubit color, double angle) {
  if (controls.empty()) return Gate::ry(color, angle);
  return Gate::cry(std::move(controls), color, angle);
}

void check_angles(std::span<const Qubit> position, const AngleMap& angles) {
  if (position.size() != 2 * static_cast<std::size_t>(angles.exponent())) {
    throw InvalidArgumentError("position register of " + std::to_string(position.size()) +
                               " qubits does not address a " +
                               std::to_string(angles.side()) + "x" +
                               std::to_string(angles.side()) + " image");
  }
}

void check_offset(std::span<const Qubit> offset) {
  if (offset.size() % 2 != 0) {
    throw InvalidArgumentError("offset register must hold 2m qubits");
  }
}

template <typename AngleFn>
Circuit weighted_rotations(std::span<const Qubit> offset, std::span<const Qubit> neighbor,
                           Qubit color, const AngleMap& angles, AngleFn angle_for) {
  check_offset(offset);
  check_angles(neighbor, angles);
  const std::span<const Qubit> color_span(&color, 1);
  require_disjoint({offset, neighbor, color_span});
  Circuit circuit = circuit_over({offset, neighbor, color_span});
  const auto m = static_cast<unsigned>(offset.size() / 2);
  const std::uint64_t cell = std::uint64_t{1} << m;
  for (std::uint64_t o = 0; o < cell * cell; ++o) {
    const std::size_t x = o & (cell - 1);
    const std::size_t y = o >> m;
    for (std::size_t p = 0; p < angles.size(); ++p) {
      std::vector<Control> controls;
      append_value_controls(offset, o, controls);
      append_value_controls(neighbor, p, controls);
      circuit.add(rotation(std::move(controls), color, angle_for(x, y, m, angles[p])));
    }
  }
  return circuit;
}

}  // namespace

Circuit build_pa(std::span<const Qubit> source, std::span<const Qubit> dest) {
  if (source.size() != dest.size()) {
    throw InvalidArgumentError("PA source and destination sizes differ");
  }
  require_disjoint({source, dest});
  Circuit circuit = circuit_over({source, dest});
  for (std::size_t b = 0; b < source.size(); ++b) {
    circuit.add(Gate::cnot({source[b]}, dest[b]));
  }
  return circuit;
}

Circuit build_omega(std::span<const Qubit> ref, std::span<const Qubit> reg) {
  if (ref.size() != reg.size() || reg.empty()) {
    throw InvalidArgumentError("Omega needs equal, non-empty reference and target registers");
  }
  require_disjoint({ref, reg});
  const std::size_t n = reg.size();
  Circuit circuit = circuit_over({ref, reg});
  circuit.append(build_pa(ref, reg), "PA");

  circuit.begin_block("INCREMENT");
  // All-ones copy becomes 2^n - 2 so the increment below lands on 2^n - 1.
  circuit.add(Gate::mcx(Gate::on_one(std::vector<Qubit>(ref.begin(), ref.end())), reg[0]));
  for (std::size_t j = n - 1; j >= 1; --j) {
    const std::vector<Qubit> lower(reg.begin(), reg.begin() + static_cast<std::ptrdiff_t>(j));
    circuit.add(Gate::mcx(Gate::on_one(lower), reg[j]));
  }
  circuit.add(Gate::x(reg[0]));
  circuit.end_block();
  return circuit;
}

Circuit build_ca(std::span<const Qubit> neighbor, Qubit color, const AngleMap& angles) {
  check_angles(neighbor, angles);
  const std::span<const Qubit> color_span(&color, 1);
  require_disjoint({neighbor, color_span});
  Circuit circuit = circuit_over({neighbor, color_span});
  for (std::size_t p = 0; p < angles.size(); ++p) {
    std::vector<Control> controls;
    append_value_controls(neighbor, p, controls);
    circuit.add(rotation(std::move(controls), color, 2.0 * angles[p]));
  }
  return circuit;
}

Circuit build_wa(std::span<const Qubit> offset, std::span<const Qubit> neighbor, Qubit color,
                 const AngleMap& angles, int which, WeightMode mode) {
  if (which < 1 || which > 4) {
    throw InvalidArgumentError("WA index " + std::to_string(which) + " outside 1..4");
  }
  return weighted_rotations(offset, neighbor, color, angles,
                            [&](std::size_t x, std::size_t y, unsigned m, double theta) {
                              const double w = bilinear_weight(which, x, y, m, mode);
                              return 2.0 * (w - 1.0) * theta;
                            });
}

Circuit build_fused_ca_wa(std::span<const Qubit> offset, std::span<const Qubit> neighbor,
                          Qubit color, const AngleMap& angles, int which, WeightMode mode) {
  if (which < 1 || which > 4) {
    throw InvalidArgumentError("WA index " + std::to_string(which) + " outside 1..4");
  }
  return weighted_rotations(offset, neighbor, color, angles,
                            [&](std::size_t x, std::size_t y, unsigned m, double theta) {
                              return 2.0 * bilinear_weight(which, x, y, m, mode) * theta;
                            });
}

Circuit build_quarter(std::span<const Qubit> source, Qubit color, const AngleMap& angles,
                      unsigned m) {
  check_angles(source, angles);
  const unsigned bits = angles.exponent();
  if (m > bits) throw InvalidArgumentError("QUARTER ratio exceeds the source size");
  const std::span<const Qubit> color_span(&color, 1);
  require_disjoint({source, color_span});
  Circuit circuit = circuit_over({source, color_span});
  const std::size_t side = angles.side();
  const std::size_t step = std::size_t{1} << m;
  for (std::size_t y = 0; y < side; y += step) {
    for (std::size_t x = 0; x < side; x += step) {
      const std::size_t p = y * side + x;
      std::vector<Control> controls;
      append_value_controls(source, p, controls);
      circuit.add(rotation(std::move(controls), color, 2.0 * angles[p] / 4.0));
    }
  }
  return circuit;
}

}  // namespace frqi::interp
