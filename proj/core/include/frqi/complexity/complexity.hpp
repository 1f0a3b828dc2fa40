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

#include "frqi/interp/scaling.hpp"
#include "frqi/qsim/circuit.hpp"
#include "frqi/qsim/gate_cost.hpp"

// Closed-form gate costs of the interpolation networks and an auditor that
// sets them against exact counts. All costs are CNOT equivalents.
namespace frqi::complexity {

using qsim::CostReport;

/// sum_{k=3}^{n} (12k - 11) = 6n^2 - 5n - 14; 0 for n < 3.
std::int64_t kcnot_sum(unsigned n);

/// (n+1) CNOT + 1 Toffoli + kcnot_sum(n) = 6n^2 - 4n - 7. Throws
/// InvalidArgumentError for n < 2.
std::int64_t omega_cost(unsigned n);

/// The Omega term the down-scaling total uses instead: 6n^2 - 3n - 8.
std::int64_t omega_cost_downscale_variant(unsigned n);

/// CA cost as printed, 2 (2^{2n} + 12[(2n-1) - 11]) 2^{2n}.
std::int64_t ca_cost_printed(unsigned n);
/// CA cost with the QUARTER-shaped reading 2^{2n} · 2 (2 + 12(2n-1) - 11).
std::int64_t ca_cost_quarter_shaped(unsigned n);
/// WA cost as printed, 2 (2^{2m} + 12[(2m-1) - 11]) 2^{2m}.
std::int64_t wa_cost_printed(unsigned m);

/// 2^{2n} [48(m+n) - 18].
std::int64_t quarter_cost(unsigned n, unsigned m);

/// 8n + 2(6n^2-4n-7) + 4·2^{4n} + 4·2^{4m} + 4·3 = 12n^2 - 2 + 2^{4n+2} + 2^{4m+2}.
std::int64_t upscale_cost(unsigned n, unsigned m);
/// 2^{4n} + 2^{4m}.
std::int64_t upscale_cost_asymptotic(unsigned n, unsigned m);

/// 8n + 2(6n^2-3n-8) + 4·2^{2n} + 4·3; independent of m as printed.
std::int64_t downscale_cost(unsigned n, unsigned m = 1);
/// 2^{2n}.
std::int64_t downscale_cost_asymptotic(unsigned n);

/// Exact counts of an Omega circuit on n qubits against omega_cost(n).
CostReport audit_omega(const qsim::Circuit& circuit, unsigned n);

/// Exact counts of a circuit from build_upscale_circuit() or
/// build_downscale_circuit() against the closed forms, with a note for every
/// place where the two disagree or the closed form is internally
/// inconsistent.
CostReport audit_circuit(const qsim::Circuit& circuit, const interp::ScaleSpec& spec);

}  // namespace frqi::complexity
