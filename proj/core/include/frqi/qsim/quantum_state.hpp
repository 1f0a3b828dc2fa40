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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace frqi::qsim {

using Qubit = std::uint32_t;
using Amplitude = std::complex<double>;

/// Absolute tolerance used for every amplitude/angle comparison.
inline constexpr double kTolerance = 1e-9;

/// Default cap on dense-state size (2^24 amplitudes, 256 MiB).
inline constexpr unsigned kDefaultQubitBudget = 24;

/// Limits applied when a dense state is allocated.
struct SimConfig {
  unsigned qubit_budget = kDefaultQubitBudget;
};

/// Returns the process-wide configuration used by default arguments.
SimConfig default_sim_config();

/// Throws BudgetExceededError if `num_qubits` does not fit `config`, or if
/// the state would not fit in physical memory.
void check_budget(unsigned num_qubits, const SimConfig& config);

namespace detail {
struct StateAccess;
}

/// Dense state vector. Qubit q is bit q of the basis index (little endian),
/// so basis state |b_{k-1} ... b_1 b_0> has index sum_q b_q 2^q.
class QuantumState {
 public:
  /// |0...0> on `num_qubits` qubits.
  explicit QuantumState(unsigned num_qubits,
                        const SimConfig& config = default_sim_config());

  /// Computational basis state |index>.
  static QuantumState basis(unsigned num_qubits, std::uint64_t index,
                            const SimConfig& config = default_sim_config());

  /// Wraps `amplitudes` (length 2^num_qubits). Normalization is not forced;
  /// call is_normalized() to check.
  static QuantumState from_amplitudes(
      unsigned num_qubits, std::vector<Amplitude> amplitudes,
      const SimConfig& config = default_sim_config());

  /// log2 of the block size the simulator uses to skip all-zero regions.
  static constexpr unsigned kChunkBits = 10;

  unsigned num_qubits() const noexcept { return num_qubits_; }
  std::size_t size() const noexcept { return amplitudes_.size(); }

  std::span<const Amplitude> amplitudes() const noexcept { return amplitudes_; }
  std::span<Amplitude> amplitudes() noexcept {
    untracked_ = true;
    return amplitudes_;
  }

  const Amplitude& operator[](std::size_t index) const { return amplitudes_[index]; }
  Amplitude& operator[](std::size_t index) {
    untracked_ = true;
    return amplitudes_[index];
  }

  double norm_squared() const noexcept;
  bool is_normalized(double tolerance = kTolerance) const noexcept;

  /// Largest |a_i - b_i| over all amplitudes; states must have equal size.
  double max_abs_diff(const QuantumState& other) const;

 private:
  friend struct detail::StateAccess;

  QuantumState(unsigned num_qubits, std::vector<Amplitude> amplitudes);

  unsigned num_qubits_;
  std::vector<Amplitude> amplitudes_;
  // One flag per block of 2^kChunkBits amplitudes, set whenever the block
  // may hold a nonzero amplitude. Mutable access sets untracked_, after
  // which every block counts as occupied.
  std::vector<std::uint8_t> occupied_;
  bool untracked_ = false;
};

}  // namespace frqi::qsim
