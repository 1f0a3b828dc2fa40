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

#include "frqi/qsim/simulator.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <thread>
#include <vector>

#include "frqi/error.hpp"

namespace frqi::qsim {

namespace detail {

struct StateAccess {
  static Amplitude* data(QuantumState& state) { return state.amplitudes_.data(); }

  static std::uint8_t* occupancy(QuantumState& state) {
    if (state.untracked_) {
      std::fill(state.occupied_.begin(), state.occupied_.end(), std::uint8_t{1});
      state.untracked_ = false;
    }
    return state.occupied_.data();
  }
};

}  // namespace detail

namespace {

using Index = std::uint64_t;

// Runs fn over [0, count), split across the hardware threads when each
// worker gets at least `min_per_thread` items. Every index is written by
// exactly one worker, so results do not depend on the split.
template <typename Fn>
void parallel_for(Index count, Index min_per_thread, Fn&& fn) {
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const Index workers =
      std::min<Index>(hw, std::max<Index>(1, count / std::max<Index>(1, min_per_thread)));
  if (workers <= 1) {
    fn(Index{0}, count);
    return;
  }
  std::vector<std::jthread> pool;
  pool.reserve(workers - 1);
  const Index chunk = (count + workers - 1) / workers;
  for (Index w = 1; w < workers; ++w) {
    const Index begin = w * chunk;
    const Index end = std::min(count, begin + chunk);
    if (begin < end) pool.emplace_back([&fn, begin, end] { fn(begin, end); });
  }
  fn(Index{0}, std::min(count, chunk));
}

// Inserts zero bits at each position of `fixed` into `k`.
class BitDeposit {
 public:
  explicit BitDeposit(std::vector<Qubit> fixed) : fixed_(std::move(fixed)) {
    std::sort(fixed_.begin(), fixed_.end());
    for (std::size_t i = 0; i < fixed_.size(); ++i) {
      low_masks_[i] = (Index{1} << fixed_[i]) - 1;
      fixed_mask_ |= Index{1} << fixed_[i];
    }
  }

  Index operator()(Index k) const {
    for (std::size_t i = 0; i < fixed_.size(); ++i) {
      k = ((k & ~low_masks_[i]) << 1) | (k & low_masks_[i]);
    }
    return k;
  }

  /// The deposit of k + 1 given the deposit `i` of k.
  Index next(Index i) const { return ((i | fixed_mask_) + 1) & ~fixed_mask_; }

  std::size_t size() const { return fixed_.size(); }

 private:
  std::vector<Qubit> fixed_;
  std::array<Index, 64> low_masks_{};
  Index fixed_mask_ = 0;
};

struct Real2x2 {
  double m00, m01, m10, m11;
};

void check_gate(const QuantumState& state, const Gate& gate) {
  if (gate.max_qubit() >= state.num_qubits()) {
    throw QubitIndexError("gate " + gate.to_string() + " references a qubit outside a " +
                          std::to_string(state.num_qubits()) + "-qubit state");
  }
}

// Calls body(base) for every index whose target bits are 0 and whose control
// bits match, skipping chunk groups with no occupied chunk. A group is the
// set of chunks reached from one base chunk by flipping high target bits;
// every chunk of a visited group is marked occupied.
template <typename Body>
void for_each_selected(QuantumState& state, const Gate& gate, Body&& body) {
  const unsigned q = state.num_qubits();
  const unsigned cb = std::min(q, QuantumState::kChunkBits);
  std::vector<Qubit> fixed = gate.targets();
  Index control_value = 0;
  for (const auto& c : gate.controls()) {
    fixed.push_back(c.qubit);
    if (c.polarity == Polarity::kOnOne) control_value |= Index{1} << c.qubit;
  }

  std::vector<Qubit> inner_fixed;
  std::vector<Qubit> outer_fixed;
  for (Qubit f : fixed) (f < cb ? inner_fixed : outer_fixed).push_back(f < cb ? f : f - cb);
  for (Qubit h = cb; h < q; ++h) inner_fixed.push_back(h);
  Index high_targets = 0;
  for (Qubit t : gate.targets()) {
    if (t >= cb) high_targets |= Index{1} << (t - cb);
  }

  const BitDeposit inner(std::move(inner_fixed));
  const BitDeposit outer(std::move(outer_fixed));
  const Index inner_count = Index{1} << (q - inner.size());
  const Index groups = Index{1} << ((q - cb) - outer.size());
  const Index high_value = control_value >> cb;
  const Index low_value = control_value & ((Index{1} << cb) - 1);
  std::uint8_t* occupied = detail::StateAccess::occupancy(state);

  parallel_for(groups, (Index{1} << 16) / inner_count, [&](Index begin, Index end) {
    Index g = outer(begin);
    for (Index k = begin; k < end; ++k, g = outer.next(g)) {
      const Index chunk = g | high_value;
      bool any = false;
      for (Index sub = high_targets;; sub = (sub - 1) & high_targets) {
        any = any || occupied[chunk | sub] != 0;
        if (sub == 0) break;
      }
      if (!any) continue;
      const Index base = (chunk << cb) | low_value;
      Index free = 0;
      for (Index j = 0; j < inner_count; ++j, free = inner.next(free)) body(base | free);
      for (Index sub = high_targets;; sub = (sub - 1) & high_targets) {
        occupied[chunk | sub] = 1;
        if (sub == 0) break;
      }
    }
  });
}

void apply_single_target(QuantumState& state, const Gate& gate, bool is_not,
                         const Real2x2& u) {
  const Index target_bit = Index{1} << gate.target();
  Amplitude* amps = detail::StateAccess::data(state);
  for_each_selected(state, gate, [&](Index i0) {
    const Index i1 = i0 | target_bit;
    const Amplitude a0 = amps[i0];
    const Amplitude a1 = amps[i1];
    if (a0 == Amplitude{} && a1 == Amplitude{}) return;
    if (is_not) {
      amps[i0] = a1;
      amps[i1] = a0;
    } else {
      amps[i0] = u.m00 * a0 + u.m01 * a1;
      amps[i1] = u.m10 * a0 + u.m11 * a1;
    }
  });
}

void apply_swap(QuantumState& state, const Gate& gate) {
  const Index bit_a = Index{1} << gate.targets()[0];
  const Index bit_b = Index{1} << gate.targets()[1];
  Amplitude* amps = detail::StateAccess::data(state);
  for_each_selected(state, gate,
                    [&](Index base) { std::swap(amps[base | bit_a], amps[base | bit_b]); });
}

}  // namespace

void apply_gate(QuantumState& state, const Gate& gate) {
  check_gate(state, gate);
  switch (gate.kind()) {
    case GateKind::kNot:
    case GateKind::kCnot:
    case GateKind::kToffoli:
    case GateKind::kKControlledNot:
      apply_single_target(state, gate, true, {});
      return;
    case GateKind::kHadamard: {
      const double r = 1.0 / std::sqrt(2.0);
      apply_single_target(state, gate, false, {r, r, r, -r});
      return;
    }
    case GateKind::kRy:
    case GateKind::kControlledRy: {
      const double c = std::cos(gate.angle() / 2.0);
      const double s = std::sin(gate.angle() / 2.0);
      apply_single_target(state, gate, false, {c, -s, s, c});
      return;
    }
    case GateKind::kSwap:
      apply_swap(state, gate);
      return;
  }
}

void apply_circuit_in_place(QuantumState& state, const Circuit& circuit) {
  if (circuit.num_qubits() != state.num_qubits()) {
    throw QubitIndexError("circuit has " + std::to_string(circuit.num_qubits()) +
                          " qubits, state has " + std::to_string(state.num_qubits()));
  }
  apply_gates_in_place(state, circuit.gates());
}

void apply_gates_in_place(QuantumState& state, std::span<const Gate> gates) {
  for (const auto& gate : gates) apply_gate(state, gate);
}

QuantumState apply_circuit(QuantumState state, const Circuit& circuit) {
  apply_circuit_in_place(state, circuit);
  return state;
}

}  // namespace frqi::qsim
