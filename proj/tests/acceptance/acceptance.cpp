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

// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero if any fails. argv[1] names the directory of 64x64 PGM images
// used for the nearest-vs-bilinear ordering check.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <numeric>
#include <optional>
#include <random>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "frqi/cli/pgm.hpp"
#include "frqi/codec/frqi.hpp"
#include "frqi/complexity/complexity.hpp"
#include "frqi/interp/coordinates.hpp"
#include "frqi/interp/modules.hpp"
#include "frqi/interp/scaling.hpp"
#include "frqi/metrics/metrics.hpp"
#include "frqi/oracle/classical.hpp"
#include "frqi/qsim/decompose.hpp"
#include "frqi/qsim/simulator.hpp"
#include "frqi/structured.hpp"

namespace {

using namespace frqi;
using Clock = std::chrono::steady_clock;
using interp::BuildOptions;
using interp::Direction;
using interp::SwapMode;
using qsim::Gate;
using qsim::GateKind;
using qsim::QuantumState;

constexpr double kAngleTol = 1e-9;
constexpr int kImages = 50;

class Criterion {
 public:
  explicit Criterion(std::string name) : name_(std::move(name)) {}

  void check(bool ok, const std::string& what) {
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    if (!ok) ++failed_;
    ++checks_;
  }
  void detail(std::string text) { details_.push_back(std::move(text)); }
  bool passed() const { return failed_ == 0 && checks_ > 0; }

  void print() const {
    std::ostringstream line;
    line << (passed() ? "PASS" : "FAIL") << ' ' << name_ << " (" << checks_ - failed_ << '/'
         << checks_ << " checks";
    for (const auto& d : details_) line << "; " << d;
    line << ')';
    std::cout << line.str() << '\n';
    for (const auto& f : failures_) std::cout << "    " << f << '\n';
  }

 private:
  std::string name_;
  std::vector<std::string> details_;
  std::vector<std::string> failures_;
  int checks_ = 0;
  int failed_ = 0;
};

std::string fmt(const char* format, double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, format, value);
  return buf;
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

GrayImage random_image(std::size_t side, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> g(0, 255);
  std::vector<std::uint8_t> px(side * side);
  for (auto& p : px) p = static_cast<std::uint8_t>(g(rng));
  return GrayImage(side, px);
}

// Index of the first image-dependent gate: everything before the first
// color block acts on position registers only.
std::size_t color_split(const qsim::Circuit& circuit) {
  std::size_t split = circuit.size();
  for (const auto& b : circuit.blocks()) {
    if (b.label.rfind("CA", 0) == 0 || b.label.rfind("QUARTER", 0) == 0) {
      split = std::min(split, b.begin);
    }
  }
  return split;
}

// Dense runs over many images sharing one simulated position prefix.
class PrefixCache {
 public:
  template <typename Build>
  AngleMap run(const Build& build, const AngleMap& source, SwapMode swap) {
    BuildOptions options;
    options.swap = swap;
    const auto built = build(source, options);
    const auto& gates = built.circuit.gates();
    const std::size_t split = color_split(built.circuit);
    const std::vector<Gate> prefix(gates.begin(), gates.begin() + static_cast<long>(split));
    if (!state_ || prefix != prefix_) {
      prefix_ = prefix;
      state_.emplace(built.circuit.num_qubits());
      qsim::apply_gates_in_place(*state_, prefix_);
    }
    if (!work_ || work_->num_qubits() != state_->num_qubits()) {
      work_.emplace(*state_);
    } else {
      *work_ = *state_;
    }
    qsim::apply_gates_in_place(*work_, std::span<const Gate>(gates).subspan(split));
    return codec::decode_exact(*work_, built.layout.output_layout());
  }

 private:
  std::vector<Gate> prefix_;
  std::optional<QuantumState> state_;
  std::optional<QuantumState> work_;
};

// Criteria 1 and 2 with criterion 3 collected alongside.
void circuit_vs_oracle(Criterion& c, Criterion& backend, Direction direction, std::size_t side,
                       unsigned m, std::mt19937_64& rng, double& elapsed) {
  const auto start = Clock::now();
  double worst_oracle_angle = 0.0;
  double worst_backend = 0.0;
  for (SwapMode swap : {SwapMode::kAccumulate, SwapMode::kLiteralSwap}) {
    PrefixCache cache;
    std::mt19937_64 local(rng());
    for (int t = 0; t < kImages; ++t) {
      const GrayImage image = random_image(side, local);
      const AngleMap angles = codec::image_to_angles(image);
      AngleMap dense, structured;
      GrayImage oracle_image;
      std::string label = std::string(interp::to_string(swap)) + " image " + std::to_string(t);
      if (direction == Direction::kUp) {
        dense = cache.run([&](const AngleMap& a, const BuildOptions& o) {
          return interp::build_upscale_circuit(a, m, o);
        }, angles, swap);
        structured = structured::upscale_structured(angles, m);
        oracle_image = oracle::bilinear_upscale(image, m);
      } else {
        dense = cache.run([&](const AngleMap& a, const BuildOptions& o) {
          return interp::build_downscale_circuit(a, m, o);
        }, angles, swap);
        structured = structured::downscale_structured(angles, m);
        oracle_image = oracle::average_downscale(image, m);
      }
      // Weighted sums the quantized oracle is built from.
      const std::size_t out_side = structured.side();
      const unsigned out_exp = structured.exponent();
      std::vector<double> sums(out_side * out_side);
      for (std::size_t y = 0; y < out_side; ++y) {
        for (std::size_t x = 0; x < out_side; ++x) {
          double sum = 0.0;
          if (direction == Direction::kUp) {
            const auto nb = interp::upscale_neighbors({x, y}, image.exponent(), m);
            const auto off = interp::upscale_offset({x, y}, m);
            const auto w = interp::bilinear_weights(off.x, off.y, m, interp::WeightMode::kStandard);
            for (int i = 0; i < 4; ++i) sum += w[i] * angles.at(nb[i].x, nb[i].y);
          } else {
            const auto s = interp::downscale_samples({x, y}, out_exp, m);
            for (int i = 0; i < 4; ++i) sum += 0.25 * angles.at(s[i].x, s[i].y);
          }
          sums[y * out_side + x] = sum;
        }
      }
      const AngleMap expected(out_side, sums);
      const double angle_diff = dense.max_abs_diff(expected);
      worst_oracle_angle = std::max(worst_oracle_angle, angle_diff);
      c.check(angle_diff <= kAngleTol, label + " angle diff " + fmt("%.3e", angle_diff));
      c.check(codec::angles_to_image(dense) == oracle_image, label + " pixels differ from oracle");
      const double b = dense.max_abs_diff(structured);
      worst_backend = std::max(worst_backend, b);
      backend.check(b <= kAngleTol, label + " structured diff " + fmt("%.3e", b));
    }
  }
  elapsed += seconds_since(start);
  c.detail(std::to_string(side) + "x" + std::to_string(side) + " max angle diff " +
           fmt("%.2e", worst_oracle_angle));
  backend.detail(std::to_string(side) + "x" + std::to_string(side) + " " +
                 (direction == Direction::kUp ? "up" : "down") + " max diff " +
                 fmt("%.2e", worst_backend));
}

std::vector<qsim::Qubit> range(unsigned start, unsigned count) {
  std::vector<qsim::Qubit> q(count);
  std::iota(q.begin(), q.end(), start);
  return q;
}

std::uint64_t basis_index(const QuantumState& s) {
  std::uint64_t best = 0;
  for (std::uint64_t i = 0; i < s.size(); ++i) {
    if (std::abs(s[i]) > std::abs(s[best])) best = i;
  }
  return best;
}

void omega_check(Criterion& c) {
  for (unsigned n = 1; n <= 4; ++n) {
    const auto omega = interp::build_omega(range(0, n), range(n, n));
    const std::uint64_t last = (std::uint64_t{1} << n) - 1;
    for (std::uint64_t x = 0; x <= last; ++x) {
      auto s = QuantumState::basis(2 * n, x);
      qsim::apply_circuit_in_place(s, omega);
      const std::uint64_t out = basis_index(s);
      const bool ok = std::abs(std::abs(s[out]) - 1.0) < kAngleTol &&
                      out == (x | (std::min(x + 1, last) << n));
      c.check(ok, "n=" + std::to_string(n) + " X=" + std::to_string(x));
    }
  }
  c.detail("n=1..4 exhaustive, clamp at all-ones included");
}

// Classical trace of the position-register permutation.
std::uint64_t trace_positions(const qsim::Circuit& circuit, std::uint64_t bits) {
  for (const auto& g : circuit.gates()) {
    if (g.kind() == GateKind::kHadamard) continue;
    if (g.kind() == GateKind::kRy || g.kind() == GateKind::kControlledRy) break;
    bool fire = true;
    for (const auto& ctl : g.controls()) {
      fire = fire && (((bits >> ctl.qubit) & 1U) == (ctl.polarity == qsim::Polarity::kOnOne));
    }
    if (fire) bits ^= std::uint64_t{1} << g.target();
  }
  return bits;
}

std::uint64_t read(std::uint64_t bits, const std::vector<qsim::Qubit>& qubits) {
  std::uint64_t v = 0;
  for (std::size_t i = 0; i < qubits.size(); ++i) v |= ((bits >> qubits[i]) & 1U) << i;
  return v;
}

void worked_examples(Criterion& c) {
  using interp::PixelCoord;
  const std::array<PixelCoord, 4> neighbors{{{1, 2}, {2, 2}, {1, 3}, {2, 3}}};
  c.check(interp::upscale_neighbors({0b010, 0b101}, 2, 1) == neighbors, "up-scale neighbor set");
  c.check(interp::upscale_offset({0b010, 0b101}, 1) == PixelCoord{0, 1}, "up-scale offset");
  const std::array<PixelCoord, 4> samples{{{2, 4}, {4, 4}, {2, 6}, {4, 6}}};
  c.check(interp::downscale_samples({0b01, 0b10}, 2, 1) == samples, "down-scale sample set");

  BuildOptions audit;
  audit.dense = false;
  const auto up = interp::build_upscale_circuit(AngleMap(4, 0.1), 1, audit);
  const std::uint64_t up_bits = trace_positions(up.circuit, 0b010 | (0b101 << 3));
  for (std::size_t i = 0; i < 4; ++i) {
    const auto q = up.layout.neighbors[i].qubits();
    const std::vector<qsim::Qubit> xs(q.begin(), q.begin() + 2), ys(q.begin() + 2, q.end());
    c.check(read(up_bits, xs) == neighbors[i].x && read(up_bits, ys) == neighbors[i].y,
            "up-scale circuit neighbor " + std::to_string(i + 1));
  }
  const auto down = interp::build_downscale_circuit(AngleMap(8, 0.1), 1, audit);
  const std::uint64_t down_bits = trace_positions(down.circuit, 0b01 | (0b10 << 2));
  for (int i = 0; i < 4; ++i) {
    const auto q = down.layout.source_qubits(i);
    const std::vector<qsim::Qubit> xs(q.begin(), q.begin() + 3), ys(q.begin() + 3, q.end());
    const auto& s = samples[static_cast<std::size_t>(i)];
    c.check(read(down_bits, xs) == s.x && read(down_bits, ys) == s.y,
            "down-scale circuit sample " + std::to_string(i + 1));
  }
}

bool has_note(const qsim::CostReport& r, const std::string& needle) {
  return std::any_of(r.discrepancy_notes.begin(), r.discrepancy_notes.end(),
                     [&](const std::string& s) { return s.find(needle) != std::string::npos; });
}

void cost_formulas(Criterion& c) {
  for (unsigned n = 0; n <= 50; ++n) {
    std::int64_t direct = 0;
    for (unsigned k = 3; k <= n; ++k) direct += 12 * static_cast<std::int64_t>(k) - 11;
    c.check(complexity::kcnot_sum(n) == direct, "kcnot_sum n=" + std::to_string(n));
  }
  for (unsigned n = 2; n <= 8; ++n) {
    const auto r = complexity::audit_omega(interp::build_omega(range(0, n), range(n, n)), n);
    c.check(r.cnot_equivalent_total == complexity::omega_cost(n),
            "Omega audit n=" + std::to_string(n));
  }
  BuildOptions audit;
  audit.dense = false;
  audit.swap = SwapMode::kLiteralSwap;
  for (unsigned n = 2; n <= 6; ++n) {
    const auto built = interp::build_upscale_circuit(AngleMap(std::size_t{1} << n, 0.1), 1, audit);
    const auto r = complexity::audit_circuit(built.circuit, {n, 1, Direction::kUp});
    c.check(r.by_module.at("PA").cnot_equivalent == 8 * static_cast<std::int64_t>(n),
            "PA audit n=" + std::to_string(n));
    c.check(r.by_module.at("SWAP").cnot_equivalent == 12 && r.counts.swap == 4,
            "Swap audit n=" + std::to_string(n));
    c.check(has_note(r, "CA blocks") && has_note(r, "WA blocks") && has_note(r, "NOT gates"),
            "CA/WA/NOT notes n=" + std::to_string(n));
  }
  c.check(complexity::upscale_cost(1, 1) == 138, "upscale_cost(1,1)");
  c.check(complexity::downscale_cost(1) == 26, "downscale_cost(1)");
  const auto down = interp::build_downscale_circuit(AngleMap(8, 0.1), 1, audit);
  const auto r = complexity::audit_circuit(down.circuit, {2, 1, Direction::kDown});
  c.check(has_note(r, "Omega term conflict"), "Omega term conflict note");
  c.check(r.by_module.at("SWAP").cnot_equivalent == 12, "down-scale Swap audit");
  c.detail("kcnot n<=50, Omega n=2..8, PA/Swap n=2..6");
}

GrayImage shifted(const GrayImage& a, int delta) {
  GrayImage b = a;
  for (auto& p : b.pixels()) p = static_cast<std::uint8_t>(std::clamp(p + delta, 0, 255));
  return b;
}

void metric_goldens(Criterion& c) {
  std::mt19937_64 rng(2026);
  std::uniform_int_distribution<int> g(0, 254);
  std::vector<std::uint8_t> px(64 * 64);
  for (auto& p : px) p = static_cast<std::uint8_t>(g(rng));
  const GrayImage a(64, px);
  const double p1 = metrics::psnr(a, shifted(a, 1));
  c.check(std::abs(p1 - 48.13) <= 0.01, "psnr(a, a+1) = " + fmt("%.4f", p1));
  c.check(metrics::ssim(a, a) == 1.0, "ssim(a, a) != 1");
  const double s = metrics::ssim(GrayImage(64, 0), GrayImage(64, 255));
  c.check(std::abs(s - 1.0e-4) <= 1e-5, "ssim(0, 255) = " + fmt("%.3e", s));
  c.detail("psnr " + fmt("%.4f", p1) + " dB, ssim(0,255) " + fmt("%.3e", s));
}

void table_ordering(Criterion& c, const std::string& dir) {
  const auto start = Clock::now();
  std::vector<std::filesystem::path> files;
  if (std::filesystem::is_directory(dir)) {
    for (const auto& e : std::filesystem::directory_iterator(dir)) {
      if (e.path().extension() == ".pgm") files.push_back(e.path());
    }
  }
  std::sort(files.begin(), files.end());
  c.check(files.size() >= 3, "need at least 3 images in " + dir);
  for (const auto& f : files) {
    const GrayImage image = cli::read_pgm_file(f.string());
    const std::string name = f.stem().string();
    c.check(image.side() == 64, name + " is not 64x64");
    metrics::MetricReport nearest[2], bilinear[2];
    for (unsigned m : {1u, 2u}) {
      const GrayImage low = oracle::subsample(image, m);
      const GrayImage b = codec::angles_to_image(
          structured::upscale_structured(codec::image_to_angles(low), m));
      nearest[m - 1] = metrics::compare(image, oracle::nearest_upscale(low, m));
      bilinear[m - 1] = metrics::compare(image, b);
      const std::string tag = name + " m=" + std::to_string(m);
      c.check(bilinear[m - 1].psnr_db > nearest[m - 1].psnr_db, tag + " PSNR B <= N");
      c.check(bilinear[m - 1].ssim > nearest[m - 1].ssim, tag + " SSIM B <= N");
    }
    c.check(nearest[1].psnr_db < nearest[0].psnr_db && bilinear[1].psnr_db < bilinear[0].psnr_db,
            name + " PSNR does not degrade");
    c.check(nearest[1].ssim < nearest[0].ssim && bilinear[1].ssim < bilinear[0].ssim,
            name + " SSIM does not degrade");
  }
  const double elapsed = seconds_since(start);
  c.check(elapsed < 30.0, "runtime " + fmt("%.2f", elapsed) + " s over 30 s");
  c.detail(std::to_string(files.size()) + " images, " + fmt("%.2f", elapsed) + " s");
}

void property_suite(Criterion& c) {
  for (unsigned m = 1; m <= 4; ++m) {
    const std::uint64_t r = std::uint64_t{1} << m;
    for (std::uint64_t y = 0; y < r; ++y) {
      for (std::uint64_t x = 0; x < r; ++x) {
        c.check(oracle::weight_set(x, y, m).sum() == oracle::Rational{1, 1},
                "weights do not sum to 1 at m=" + std::to_string(m));
      }
    }
  }

  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> angle(-2.0, 2.0);
  for (int t = 0; t < 50; ++t) {
    const double a = angle(rng), b = angle(rng);
    QuantumState s1(2), s2(2);
    qsim::apply_gate(s1, Gate::h(1));
    qsim::apply_gate(s2, Gate::h(1));
    for (auto* s : {&s1, &s2}) qsim::apply_gate(*s, Gate::cry(Gate::on_one({1}), 0, 0.4));
    qsim::apply_gate(s1, Gate::ry(0, a));
    qsim::apply_gate(s1, Gate::ry(0, b));
    qsim::apply_gate(s2, Gate::ry(0, a + b));
    c.check(s1.max_abs_diff(s2) <= kAngleTol, "rotation additivity");
  }

  for (unsigned k = 1; k <= 4; ++k) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
      std::vector<qsim::Control> controls;
      for (unsigned q = 0; q < k; ++q) {
        controls.push_back({q + 1, ((mask >> q) & 1U) ? qsim::Polarity::kOnZero
                                                      : qsim::Polarity::kOnOne});
      }
      for (const Gate& gate : {Gate::mcx(controls, 0), Gate::cry(controls, 0, 0.7)}) {
        const unsigned work = qsim::work_qubits_required(gate);
        const auto network = qsim::decompose_gate(gate, range(k + 1, work));
        for (std::uint64_t in = 0; in < (std::uint64_t{1} << (k + 1)); ++in) {
          auto direct = QuantumState::basis(k + 1 + work, in);
          auto expanded = direct;
          qsim::apply_gate(direct, gate);
          qsim::apply_gates_in_place(expanded, network);
          c.check(direct.max_abs_diff(expanded) <= kAngleTol, "decomposition " + gate.to_string());
        }
      }
    }
  }

  for (unsigned e = 0; e <= 4; ++e) {
    const GrayImage image = random_image(std::size_t{1} << e, rng);
    const auto encoded = codec::encode_frqi(codec::image_to_angles(image));
    const AngleMap back =
        codec::decode_exact(encoded.state, codec::FrqiLayout::canonical(image.exponent()));
    c.check(codec::angles_to_image(back) == image, "FRQI round trip side " + std::to_string(1 << e));
    c.check(back.max_abs_diff(codec::image_to_angles(image)) <= kAngleTol, "round trip angles");
    const auto prepared = qsim::apply_circuit(QuantumState(encoded.circuit.num_qubits()),
                                              encoded.circuit);
    c.check(prepared.max_abs_diff(encoded.state) <= kAngleTol, "preparation circuit");
  }

  const AngleMap angles = codec::image_to_angles(random_image(4, rng));
  const auto state = codec::frqi_state(angles);
  double previous = 1e9;
  std::string errors;
  for (std::uint64_t shots : {100, 1000, 10000, 100000}) {
    double total = 0.0;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const auto r = codec::decode_sampled(state, codec::FrqiLayout::canonical(2), shots, seed);
      for (std::size_t i = 0; i < angles.size(); ++i) total += std::abs(r.angles[i] - angles[i]);
    }
    const double mean = total / (20.0 * static_cast<double>(angles.size()));
    c.check(mean < previous, "sampled error does not shrink at " + std::to_string(shots));
    errors += (errors.empty() ? "" : "/") + fmt("%.3g", mean);
    previous = mean;
  }
  c.detail("sampled mean error " + errors);
}

}  // namespace

int main(int argc, char** argv) {
  const std::string corpus = argc > 1 ? argv[1] : "tests/data";
  std::mt19937_64 rng(20260101);

  Criterion ac1("1 up-scaling circuit equals oracle");
  Criterion ac2("2 down-scaling circuit equals oracle");
  Criterion ac3("3 structured backend equals dense");
  Criterion ac4("4 Omega increment with clamp");
  Criterion ac5("5 worked-example coordinates");
  Criterion ac6("6 cost formulas and discrepancy notes");
  Criterion ac7("7 metric golden values");
  Criterion ac8("8 nearest vs bilinear ordering");
  Criterion ac9("9 property suite");

  double up_seconds = 0.0;
  circuit_vs_oracle(ac1, ac3, Direction::kUp, 4, 1, rng, up_seconds);
  ac1.check(up_seconds < 60.0, "runtime " + fmt("%.2f", up_seconds) + " s over 60 s");
  ac1.detail(std::to_string(kImages) + " images x 2 modes, " + fmt("%.2f", up_seconds) + " s");

  double down_seconds = 0.0;
  circuit_vs_oracle(ac2, ac3, Direction::kDown, 4, 1, rng, down_seconds);
  circuit_vs_oracle(ac2, ac3, Direction::kDown, 8, 1, rng, down_seconds);
  ac2.detail(std::to_string(kImages) + " images x 2 modes x 2 sizes, " +
             fmt("%.2f", down_seconds) + " s");

  omega_check(ac4);
  worked_examples(ac5);
  cost_formulas(ac6);
  metric_goldens(ac7);
  table_ordering(ac8, corpus);
  property_suite(ac9);

  bool ok = true;
  for (const Criterion* c : {&ac1, &ac2, &ac3, &ac4, &ac5, &ac6, &ac7, &ac8, &ac9}) {
    c->print();
    ok = ok && c->passed();
  }
  return ok ? 0 : 1;
}
