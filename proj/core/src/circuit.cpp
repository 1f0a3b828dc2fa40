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

#include "frqi/qsim/circuit.hpp"

#include <algorithm>
#include <string>

#include "frqi/error.hpp"

namespace frqi::qsim {

const char* to_string(RegisterRole role) {
  switch (role) {
    case RegisterRole::kTargetPosition: return "target-position";
    case RegisterRole::kNeighborPosition: return "neighbor-position";
    case RegisterRole::kOffset: return "offset";
    case RegisterRole::kColor: return "color";
    case RegisterRole::kWork: return "work";
    case RegisterRole::kPosition: return "position";
  }
  return "?";
}

std::vector<Qubit> Register::qubits() const {
  std::vector<Qubit> out(size);
  for (unsigned i = 0; i < size; ++i) out[i] = start + i;
  return out;
}

Circuit::Circuit(unsigned num_qubits) : num_qubits_(num_qubits) {}

const Register& Circuit::add_register(std::string name, RegisterRole role, unsigned size) {
  const Qubit start = num_qubits_;
  registers_.push_back(Register{std::move(name), role, start, size});
  num_qubits_ = std::max(num_qubits_, registers_.back().end());
  return registers_.back();
}

std::optional<Register> Circuit::find_register(std::string_view name) const {
  for (const auto& r : registers_) {
    if (r.name == name) return r;
  }
  return std::nullopt;
}

void Circuit::add(Gate gate) {
  if (gate.max_qubit() >= num_qubits_) {
    throw QubitIndexError("gate " + gate.to_string() + " exceeds circuit width " +
                          std::to_string(num_qubits_));
  }
  gates_.push_back(std::move(gate));
}

void Circuit::append(const Circuit& other, std::string_view label) {
  if (other.num_qubits_ > num_qubits_) {
    throw QubitIndexError("appended circuit uses " + std::to_string(other.num_qubits_) +
                          " qubits, host has " + std::to_string(num_qubits_));
  }
  if (!label.empty()) begin_block(std::string(label));
  const std::size_t offset = gates_.size();
  gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
  for (const auto& b : other.blocks_) {
    blocks_.push_back(Block{b.label, b.begin + offset, b.end + offset});
  }
  if (!label.empty()) end_block();
}

void Circuit::begin_block(std::string label) {
  open_blocks_.push_back(blocks_.size());
  blocks_.push_back(Block{std::move(label), gates_.size(), gates_.size()});
}

void Circuit::end_block() {
  if (open_blocks_.empty()) throw InvalidArgumentError("end_block without begin_block");
  blocks_[open_blocks_.back()].end = gates_.size();
  open_blocks_.pop_back();
}

void Circuit::add_block(Block block) {
  if (block.begin > block.end || block.end > gates_.size()) {
    throw InvalidArgumentError("block '" + block.label + "' is out of range");
  }
  blocks_.push_back(std::move(block));
}

Circuit Circuit::layout_only() const {
  Circuit out;
  out.num_qubits_ = num_qubits_;
  out.registers_ = registers_;
  return out;
}

std::vector<Gate> Circuit::gates_in_blocks(std::string_view prefix) const {
  std::vector<bool> selected(gates_.size(), false);
  for (const auto& b : blocks_) {
    if (b.label.starts_with(prefix)) {
      std::fill(selected.begin() + static_cast<std::ptrdiff_t>(b.begin),
                selected.begin() + static_cast<std::ptrdiff_t>(b.end), true);
    }
  }
  std::vector<Gate> out;
  for (std::size_t i = 0; i < gates_.size(); ++i) {
    if (selected[i]) out.push_back(gates_[i]);
  }
  return out;
}

}  // namespace frqi::qsim
