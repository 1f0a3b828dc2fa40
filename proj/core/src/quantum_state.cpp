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

#include "frqi/qsim/quantum_state.hpp"

#include <unistd.h>

#include <algorithm>
#include <cmath>
#include <string>

#include "frqi/error.hpp"

namespace frqi::qsim {

SimConfig default_sim_config() { return SimConfig{}; }

void check_budget(unsigned num_qubits, const SimConfig& config) {
  if (num_qubits > config.qubit_budget) {
    throw BudgetExceededError("dense state needs " + std::to_string(num_qubits) +
                                  " qubits, budget is " +
                                  std::to_string(config.qubit_budget),
                              num_qubits);
  }
  if (num_qubits >= 40) {
    throw BudgetExceededError(
        "dense state needs " + std::to_string(num_qubits) + " qubits", num_qubits);
  }
  const long pages = ::sysconf(_SC_PHYS_PAGES);
  const long page_size = ::sysconf(_SC_PAGE_SIZE);
  if (pages > 0 && page_size > 0) {
    const double physical = static_cast<double>(pages) * static_cast<double>(page_size);
    const double needed = std::ldexp(static_cast<double>(sizeof(Amplitude)), num_qubits);
    if (needed > 0.75 * physical) {
      throw BudgetExceededError("dense state on " + std::to_string(num_qubits) +
                                    " qubits does not fit in physical memory",
                                num_qubits);
    }
  }
}

namespace {

std::size_t chunk_count(unsigned num_qubits) {
  return std::size_t{1} << (num_qubits - std::min(num_qubits, QuantumState::kChunkBits));
}

unsigned chunk_shift(unsigned num_qubits) { return std::min(num_qubits, QuantumState::kChunkBits); }

}  // namespace

QuantumState::QuantumState(unsigned num_qubits, const SimConfig& config)
    : num_qubits_(num_qubits) {
  check_budget(num_qubits, config);
  amplitudes_.assign(std::size_t{1} << num_qubits, Amplitude{0.0, 0.0});
  amplitudes_[0] = 1.0;
  occupied_.assign(chunk_count(num_qubits), 0);
  occupied_[0] = 1;
}

QuantumState::QuantumState(unsigned num_qubits, std::vector<Amplitude> amplitudes)
    : num_qubits_(num_qubits), amplitudes_(std::move(amplitudes)) {
  occupied_.assign(chunk_count(num_qubits), 0);
  const unsigned shift = chunk_shift(num_qubits);
  for (std::size_t i = 0; i < amplitudes_.size(); ++i) {
    if (amplitudes_[i] != Amplitude{}) occupied_[i >> shift] = 1;
  }
}

QuantumState QuantumState::basis(unsigned num_qubits, std::uint64_t index,
                                 const SimConfig& config) {
  QuantumState state(num_qubits, config);
  if (index >= state.size()) {
    throw QubitIndexError("basis index " + std::to_string(index) + " out of range for " +
                          std::to_string(num_qubits) + " qubits");
  }
  state.amplitudes_[0] = 0.0;
  state.amplitudes_[index] = 1.0;
  state.occupied_[0] = 0;
  state.occupied_[index >> chunk_shift(num_qubits)] = 1;
  return state;
}

QuantumState QuantumState::from_amplitudes(unsigned num_qubits,
                                           std::vector<Amplitude> amplitudes,
                                           const SimConfig& config) {
  check_budget(num_qubits, config);
  if (amplitudes.size() != (std::size_t{1} << num_qubits)) {
    throw InvalidArgumentError("expected " + std::to_string(std::size_t{1} << num_qubits) +
                               " amplitudes, got " + std::to_string(amplitudes.size()));
  }
  return QuantumState(num_qubits, std::move(amplitudes));
}

double QuantumState::norm_squared() const noexcept {
  double sum = 0.0;
  for (const auto& a : amplitudes_) sum += std::norm(a);
  return sum;
}

bool QuantumState::is_normalized(double tolerance) const noexcept {
  return std::abs(norm_squared() - 1.0) <= tolerance;
}

double QuantumState::max_abs_diff(const QuantumState& other) const {
  if (other.size() != size()) {
    throw InvalidArgumentError("state size mismatch");
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < amplitudes_.size(); ++i) {
    worst = std::max(worst, std::abs(amplitudes_[i] - other.amplitudes_[i]));
  }
  return worst;
}

}  // namespace frqi::qsim
