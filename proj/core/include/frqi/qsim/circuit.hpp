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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "frqi/qsim/gate.hpp"

namespace frqi::qsim {

enum class RegisterRole {
  kTargetPosition,
  kNeighborPosition,
  kOffset,
  kColor,
  kWork,
  kPosition,
};

const char* to_string(RegisterRole role);

/// Named contiguous qubit range [start, start + size).
struct Register {
  std::string name;
  RegisterRole role;
  Qubit start = 0;
  unsigned size = 0;

  Qubit operator[](unsigned i) const { return start + i; }
  Qubit end() const { return start + size; }
  std::vector<Qubit> qubits() const;
};

/// Labelled gate range [begin, end) inside a circuit, e.g. "PA" or "CA-2".
struct Block {
  std::string label;
  std::size_t begin = 0;
  std::size_t end = 0;
};

/// Ordered gate list over named registers.
///
/// Registers are appended back to back, so they always partition a prefix of
/// the qubit indices. Every added gate is range checked against num_qubits().
class Circuit {
 public:
  Circuit() = default;
  /// A circuit over `num_qubits` qubits without register metadata.
  explicit Circuit(unsigned num_qubits);

  /// Appends a register at index num_qubits() and grows the circuit.
  const Register& add_register(std::string name, RegisterRole role, unsigned size);

  unsigned num_qubits() const noexcept { return num_qubits_; }
  const std::vector<Register>& registers() const noexcept { return registers_; }
  const std::vector<Gate>& gates() const noexcept { return gates_; }
  const std::vector<Block>& blocks() const noexcept { return blocks_; }
  std::size_t size() const noexcept { return gates_.size(); }

  /// Lookup by exact register name.
  std::optional<Register> find_register(std::string_view name) const;

  void add(Gate gate);

  /// Appends every gate of `other`. `other` must not use more qubits; its
  /// blocks are carried over (shifted), optionally nested under `label`.
  void append(const Circuit& other, std::string_view label = {});

  /// Opens/closes a labelled block around the gates added in between.
  void begin_block(std::string label);
  void end_block();
  /// Records an already delimited block; throws if it exceeds the gate list.
  void add_block(Block block);

  /// Same width and registers, no gates or blocks.
  Circuit layout_only() const;

  /// Gates belonging to blocks whose label starts with `prefix`.
  std::vector<Gate> gates_in_blocks(std::string_view prefix) const;

 private:
  unsigned num_qubits_ = 0;
  std::vector<Register> registers_;
  std::vector<Gate> gates_;
  std::vector<Block> blocks_;
  std::vector<std::size_t> open_blocks_;
};

}  // namespace frqi::qsim
