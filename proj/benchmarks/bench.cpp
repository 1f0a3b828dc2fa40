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

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "frqi/codec/frqi.hpp"
#include "frqi/interp/scaling.hpp"
#include "frqi/metrics/metrics.hpp"
#include "frqi/pipeline.hpp"
#include "frqi/qsim/simulator.hpp"
#include "frqi/structured.hpp"

namespace {

using namespace frqi;

GrayImage random_image(std::size_t side, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> g(0, 255);
  std::vector<std::uint8_t> px(side * side);
  for (auto& p : px) p = static_cast<std::uint8_t>(g(rng));
  return GrayImage(side, px);
}

qsim::QuantumState dense_state(unsigned q) {
  qsim::QuantumState s(q);
  for (unsigned i = 0; i < q; ++i) qsim::apply_gate(s, qsim::Gate::h(i));
  return s;
}

void BM_Hadamard(benchmark::State& state) {
  const auto q = static_cast<unsigned>(state.range(0));
  auto s = dense_state(q);
  const auto gate = qsim::Gate::h(q / 2);
  for (auto _ : state) {
    qsim::apply_gate(s, gate);
    benchmark::ClobberMemory();
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(s.size()));
}
BENCHMARK(BM_Hadamard)->Arg(16)->Arg(20)->Arg(22);

void BM_ControlledRy(benchmark::State& state) {
  const auto q = static_cast<unsigned>(state.range(0));
  auto s = dense_state(q);
  const auto gate = qsim::Gate::cry(qsim::Gate::on_one({0, 1, 2, 3}), q - 1, 0.3);
  for (auto _ : state) {
    qsim::apply_gate(s, gate);
    benchmark::ClobberMemory();
  }
}
BENCHMARK(BM_ControlledRy)->Arg(16)->Arg(20)->Arg(22);

void BM_DenseUpscale(benchmark::State& state) {
  const AngleMap angles = codec::image_to_angles(random_image(std::size_t(state.range(0)), 1));
  for (auto _ : state) benchmark::DoNotOptimize(dense_upscale(angles, 1));
}
BENCHMARK(BM_DenseUpscale)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_StructuredUpscale(benchmark::State& state) {
  const AngleMap angles = codec::image_to_angles(random_image(64, 2));
  const auto m = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(structured::upscale_structured(angles, m));
}
BENCHMARK(BM_StructuredUpscale)->Arg(1)->Arg(2)->Unit(benchmark::kMicrosecond);

void BM_Ssim(benchmark::State& state) {
  const auto side = std::size_t(state.range(0));
  const GrayImage a = random_image(side, 3);
  const GrayImage b = random_image(side, 4);
  for (auto _ : state) benchmark::DoNotOptimize(metrics::ssim(a, b));
}
BENCHMARK(BM_Ssim)->Arg(64)->Arg(256)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
