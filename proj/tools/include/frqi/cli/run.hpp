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
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "frqi/interp/scaling.hpp"
#include "frqi/interp/weights.hpp"
#include "frqi/qsim/quantum_state.hpp"

namespace frqi::cli {

enum class Command { kEncode, kUpscale, kDownscale, kNearest, kCompare, kCost, kVerify };
enum class Backend { kDense, kStructured };
enum class ReportFormat { kCsv, kJsonLines };

struct RunConfig {
  Command command = Command::kEncode;
  std::vector<std::string> inputs;
  /// Empty means stdout for text output.
  std::string output;
  unsigned m = 1;
  interp::Direction direction = interp::Direction::kUp;
  Backend backend = Backend::kStructured;
  interp::WeightMode weights = interp::WeightMode::kStandard;
  interp::SwapMode swap = interp::SwapMode::kAccumulate;
  std::optional<std::uint64_t> shots;
  std::uint64_t seed = 1;
  ReportFormat format = ReportFormat::kCsv;
  /// cost: image exponent n.
  unsigned n = 2;
  /// cost: expand compound gates first.
  bool decompose = false;
  /// compare: ratio exponents to evaluate.
  std::vector<unsigned> ratios = {1, 2};
  qsim::SimConfig sim;
};

/// Executes one command. Returns the process exit status; reports go to
/// `out` unless config.output names a file, diagnostics to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv into a RunConfig and runs it.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace frqi::cli
