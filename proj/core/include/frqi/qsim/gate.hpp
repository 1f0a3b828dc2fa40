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

#include <string>
#include <vector>

#include "frqi/qsim/quantum_state.hpp"

namespace frqi::qsim {

enum class GateKind {
  kNot,
  kHadamard,
  kCnot,
  kToffoli,
  kKControlledNot,  // three or more controls
  kRy,
  kControlledRy,    // one or more controls
  kSwap,
};

enum class Polarity { kOnOne, kOnZero };

struct Control {
  Qubit qubit;
  Polarity polarity = Polarity::kOnOne;

  friend bool operator==(const Control&, const Control&) = default;
};

/// One gate of the interpolation gate set. The angle is the full Ry
/// parameter: Ry(phi) = [[cos phi/2, -sin phi/2], [sin phi/2, cos phi/2]],
/// so the FRQI color rotation for theta is Ry(2 theta).
class Gate {
 public:
  static Gate x(Qubit target);
  static Gate h(Qubit target);
  static Gate ry(Qubit target, double angle);
  static Gate swap(Qubit a, Qubit b);
  static Gate cnot(Control control, Qubit target);
  static Gate toffoli(Control c0, Control c1, Qubit target);
  /// NOT with any number of controls; picks kNot/kCnot/kToffoli/
  /// kKControlledNot from the control count.
  static Gate mcx(std::vector<Control> controls, Qubit target);
  /// Ry with at least one control.
  static Gate cry(std::vector<Control> controls, Qubit target, double angle);

  /// Controls all on |1>.
  static std::vector<Control> on_one(const std::vector<Qubit>& qubits);

  GateKind kind() const noexcept { return kind_; }
  const std::vector<Qubit>& targets() const noexcept { return targets_; }
  const std::vector<Control>& controls() const noexcept { return controls_; }
  double angle() const noexcept { return angle_; }

  Qubit target() const { return targets_.front(); }
  std::size_t num_controls() const noexcept { return controls_.size(); }
  std::size_t num_zero_controls() const noexcept;

  /// Largest qubit index touched by the gate.
  Qubit max_qubit() const noexcept;

  std::string to_string() const;

  friend bool operator==(const Gate&, const Gate&) = default;

 private:
  Gate(GateKind kind, std::vector<Qubit> targets, std::vector<Control> controls,
       double angle);

  GateKind kind_;
  std::vector<Qubit> targets_;
  std::vector<Control> controls_;
  double angle_ = 0.0;
};

const char* to_string(GateKind kind);

}  // namespace frqi::qsim
