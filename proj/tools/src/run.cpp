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

#include "frqi/cli/run.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>

#include "frqi/cli/pgm.hpp"
#include "frqi/codec/frqi.hpp"
#include "frqi/complexity/complexity.hpp"
#include "frqi/error.hpp"
#include "frqi/metrics/metrics.hpp"
#include "frqi/oracle/classical.hpp"
#include "frqi/pipeline.hpp"
#include "frqi/structured.hpp"

namespace frqi::cli {
namespace {

using interp::Direction;
using interp::SwapMode;
using qsim::CostReport;

constexpr double kVerifyTolerance = 1e-9;

// Writes to config.output when set, else to the fallback stream.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) {
    if (path.empty()) {
      stream_ = &fallback;
    } else {
      file_.open(path, std::ios::binary);
      if (!file_) throw Error("cannot write " + path);
      stream_ = &file_;
    }
  }
  std::ostream& operator*() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_ = nullptr;
};

const std::string& single_input(const RunConfig& config) {
  if (config.inputs.size() != 1) throw InvalidArgumentError("expected exactly one input image");
  return config.inputs.front();
}

const std::string& required_output(const RunConfig& config) {
  if (config.output.empty()) throw InvalidArgumentError("--out is required for image output");
  return config.output;
}

interp::BuildOptions build_options(const RunConfig& config, SwapMode swap) {
  interp::BuildOptions options;
  options.weights = config.weights;
  options.swap = swap;
  options.sim = config.sim;
  return options;
}

DecodeOptions decode_options(const RunConfig& config) { return {config.shots, config.seed}; }

AngleMap scale_angles(const RunConfig& config, const AngleMap& source, Direction direction) {
  if (config.backend == Backend::kStructured) {
    return direction == Direction::kUp ? structured::upscale_structured(source, config.m, config.weights)
                                       : structured::downscale_structured(source, config.m);
  }
  const auto options = build_options(config, config.swap);
  return direction == Direction::kUp
             ? dense_upscale(source, config.m, options, decode_options(config))
             : dense_downscale(source, config.m, options, decode_options(config));
}

int cmd_encode(const RunConfig& config, std::ostream& out) {
  const GrayImage image = read_pgm_file(single_input(config));
  AngleMap angles = codec::image_to_angles(image);
  if (config.backend == Backend::kDense) {
    const auto encoded = codec::encode_frqi(angles, config.sim);
    angles = decode_output(encoded.state, codec::FrqiLayout::canonical(image.exponent()),
                           decode_options(config));
  }
  Sink sink(config.output, out);
  *sink << std::setprecision(17);
  for (double a : angles.angles()) *sink << a << '\n';
  return 0;
}

int cmd_scale(const RunConfig& config, Direction direction) {
  const GrayImage image = read_pgm_file(single_input(config));
  const std::string& path = required_output(config);
  if (config.m == 0) {
    write_pgm_file(path, image);
    return 0;
  }
  const AngleMap result = scale_angles(config, codec::image_to_angles(image), direction);
  write_pgm_file(path, codec::angles_to_image(result));
  return 0;
}

int cmd_nearest(const RunConfig& config) {
  const GrayImage image = read_pgm_file(single_input(config));
  const GrayImage result = config.direction == Direction::kUp
                               ? oracle::nearest_upscale(image, config.m)
                               : oracle::subsample(image, config.m);
  write_pgm_file(required_output(config), result);
  return 0;
}

std::string format_metric(double value, int precision) {
  if (std::isinf(value)) return "inf";
  std::ostringstream s;
  s << std::fixed << std::setprecision(precision) << value;
  return s.str();
}

int cmd_compare(const RunConfig& config, std::ostream& out) {
  if (config.inputs.empty()) throw InvalidArgumentError("compare needs at least one image");
  Sink sink(config.output, out);
  *sink << "Image,Scheme,PSNR,SSIM\n";
  RunConfig scaled = config;
  for (const auto& path : config.inputs) {
    const GrayImage image = read_pgm_file(path);
    const std::string name = std::filesystem::path(path).stem().string();
    for (unsigned m : config.ratios) {
      scaled.m = m;
      const GrayImage low = oracle::subsample(image, m);
      const GrayImage nearest = oracle::nearest_upscale(low, m);
      const GrayImage bilinear =
          codec::angles_to_image(scale_angles(scaled, codec::image_to_angles(low), Direction::kUp));
      const std::string ratio = "2^" + std::to_string(m);
      for (const auto& [scheme, result] : {std::pair{"N ", &nearest}, std::pair{"B ", &bilinear}}) {
        const auto report = metrics::compare(image, *result);
        *sink << name << ',' << scheme << ratio << ',' << format_metric(report.psnr_db, 2) << ','
              << format_metric(report.ssim, 4) << '\n';
      }
    }
  }
  return 0;
}

void emit_cost_csv(std::ostream& out, const CostReport& report) {
  const auto& c = report.counts;
  out << "metric,value\n";
  out << "not," << c.not_gates << "\nimplied_not," << c.implied_not_gates << "\nhadamard,"
      << c.hadamard << "\ncnot," << c.cnot << "\ntoffoli," << c.toffoli << "\nswap," << c.swap
      << "\nry," << c.ry << '\n';
  for (const auto& [k, count] : c.kcnot_by_controls) out << "kcnot_" << k << ',' << count << '\n';
  for (const auto& [k, count] : c.cry_by_controls) out << "cry_" << k << ',' << count << '\n';
  for (const auto& [name, counts] : report.by_module) {
    out << "module_" << name << ',' << counts.cnot_equivalent << '\n';
  }
  out << "cnot_equivalent_total," << report.cnot_equivalent_total << '\n';
  if (report.paper_formula_value) out << "paper_formula_value," << *report.paper_formula_value << '\n';
  for (const auto& note : report.discrepancy_notes) {
    std::string quoted;
    for (char ch : note) quoted += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    out << "note,\"" << quoted << "\"\n";
  }
}

void emit_cost_jsonl(std::ostream& out, const CostReport& report) {
  const auto& c = report.counts;
  nlohmann::ordered_json counts = {{"type", "counts"},        {"not", c.not_gates},
                                   {"implied_not", c.implied_not_gates},
                                   {"hadamard", c.hadamard},  {"cnot", c.cnot},
                                   {"toffoli", c.toffoli},    {"swap", c.swap},
                                   {"ry", c.ry}};
  nlohmann::ordered_json kcnot = nlohmann::ordered_json::object();
  for (const auto& [k, count] : c.kcnot_by_controls) kcnot[std::to_string(k)] = count;
  nlohmann::ordered_json cry = nlohmann::ordered_json::object();
  for (const auto& [k, count] : c.cry_by_controls) cry[std::to_string(k)] = count;
  counts["kcnot_by_controls"] = kcnot;
  counts["cry_by_controls"] = cry;
  counts["cnot_equivalent_total"] = report.cnot_equivalent_total;
  if (report.paper_formula_value) counts["paper_formula_value"] = *report.paper_formula_value;
  out << counts.dump() << '\n';
  for (const auto& [name, m] : report.by_module) {
    out << nlohmann::ordered_json{{"type", "module"}, {"name", name},
                                  {"cnot_equivalent", m.cnot_equivalent},
                                  {"gates", m.total_gates()}}
               .dump()
        << '\n';
  }
  for (const auto& note : report.discrepancy_notes) {
    out << nlohmann::ordered_json{{"type", "note"}, {"text", note}}.dump() << '\n';
  }
}

int cmd_cost(const RunConfig& config, std::ostream& out) {
  interp::BuildOptions options = build_options(config, config.swap);
  options.dense = false;
  options.decompose = config.decompose;
  CostReport report;
  if (config.direction == Direction::kUp) {
    const AngleMap source(std::size_t{1} << config.n, 0.5);
    const auto built = interp::build_upscale_circuit(source, config.m, options);
    report = complexity::audit_circuit(built.circuit, {config.n, config.m, Direction::kUp});
  } else {
    const AngleMap source(std::size_t{1} << (config.n + config.m), 0.5);
    const auto built = interp::build_downscale_circuit(source, config.m, options);
    report = complexity::audit_circuit(built.circuit, {config.n, config.m, Direction::kDown});
  }
  Sink sink(config.output, out);
  if (config.format == ReportFormat::kCsv) {
    emit_cost_csv(*sink, report);
  } else {
    emit_cost_jsonl(*sink, report);
  }
  return 0;
}

int cmd_verify(const RunConfig& config, std::ostream& out) {
  const GrayImage image = read_pgm_file(single_input(config));
  const AngleMap angles = codec::image_to_angles(image);
  const bool up = config.direction == Direction::kUp;
  const AngleMap expected = up ? structured::upscale_structured(angles, config.m, config.weights)
                               : structured::downscale_structured(angles, config.m);
  const GrayImage oracle_image = up ? oracle::bilinear_upscale(image, config.m, config.weights)
                                    : oracle::average_downscale(image, config.m);

  double worst = 0.0;
  bool images_match = codec::angles_to_image(expected) == oracle_image;
  for (SwapMode swap : {SwapMode::kAccumulate, SwapMode::kLiteralSwap}) {
    const auto options = build_options(config, swap);
    const AngleMap dense = up ? dense_upscale(angles, config.m, options)
                              : dense_downscale(angles, config.m, options);
    worst = std::max(worst, dense.max_abs_diff(expected));
    images_match = images_match && codec::angles_to_image(dense) == oracle_image;
  }
  const bool ok = images_match && worst <= kVerifyTolerance;
  out << (ok ? "EQUIVALENT" : "MISMATCH") << " max_angle_diff=" << std::scientific
      << std::setprecision(3) << worst << " oracle_images=" << (images_match ? "equal" : "differ")
      << '\n';
  return ok ? 0 : 1;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    switch (config.command) {
      case Command::kEncode:
        return cmd_encode(config, out);
      case Command::kUpscale:
        return cmd_scale(config, Direction::kUp);
      case Command::kDownscale:
        return cmd_scale(config, Direction::kDown);
      case Command::kNearest:
        return cmd_nearest(config);
      case Command::kCompare:
        return cmd_compare(config, out);
      case Command::kCost:
        return cmd_cost(config, out);
      case Command::kVerify:
        return cmd_verify(config, out);
    }
  } catch (const BudgetExceededError& e) {
    err << "error: " << e.what() << " (requires " << e.required_qubits() << " qubits)\n";
    return 3;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bilinear interpolation of FRQI quantum images"};
  app.require_subcommand(1);
  RunConfig config;

  const std::map<std::string, Backend> backends{{"dense", Backend::kDense},
                                                {"structured", Backend::kStructured}};
  const std::map<std::string, interp::WeightMode> weights{
      {"standard", interp::WeightMode::kStandard}, {"paper", interp::WeightMode::kPaperLiteral}};
  const std::map<std::string, SwapMode> swaps{{"accumulate", SwapMode::kAccumulate},
                                              {"literal", SwapMode::kLiteralSwap}};
  const std::map<std::string, Direction> directions{{"up", Direction::kUp},
                                                    {"down", Direction::kDown}};
  const std::map<std::string, ReportFormat> formats{{"csv", ReportFormat::kCsv},
                                                    {"jsonl", ReportFormat::kJsonLines}};
  std::uint64_t shots = 0;

  auto common = [&](CLI::App* sub, bool images) {
    if (images) sub->add_option("inputs", config.inputs, "input PGM image(s)")->required();
    sub->add_option("--out", config.output, "output path");
    sub->add_option("--ratio-exp", config.m, "scaling ratio exponent m (ratio 2^m)");
    sub->add_option("--backend", config.backend, "dense|structured")
        ->transform(CLI::CheckedTransformer(backends, CLI::ignore_case));
    sub->add_option("--weights", config.weights, "standard|paper")
        ->transform(CLI::CheckedTransformer(weights, CLI::ignore_case));
    sub->add_option("--swap", config.swap, "accumulate|literal")
        ->transform(CLI::CheckedTransformer(swaps, CLI::ignore_case));
    sub->add_option("--shots", shots, "sampled readout with N shots (dense backend)");
    sub->add_option("--seed", config.seed, "sampling seed");
    sub->add_option("--qubit-budget", config.sim.qubit_budget, "dense simulation qubit limit");
  };

  const std::map<std::string, Command> names{
      {"encode", Command::kEncode},   {"upscale", Command::kUpscale},
      {"downscale", Command::kDownscale}, {"nearest", Command::kNearest},
      {"compare", Command::kCompare}, {"cost", Command::kCost},
      {"verify", Command::kVerify}};
  std::map<std::string, CLI::App*> subs;
  subs["encode"] = app.add_subcommand("encode", "dump the FRQI angle of every pixel");
  subs["upscale"] = app.add_subcommand("upscale", "bilinear up-scaling by 2^m");
  subs["downscale"] = app.add_subcommand("downscale", "bilinear down-scaling by 2^m");
  subs["nearest"] = app.add_subcommand("nearest", "nearest-neighbor scaling by 2^m");
  subs["compare"] = app.add_subcommand("compare", "PSNR/SSIM of nearest vs bilinear");
  subs["cost"] = app.add_subcommand("cost", "gate-cost audit of a scaling network");
  subs["verify"] = app.add_subcommand("verify", "dense vs structured vs oracle check");
  for (const auto& [name, sub] : subs) common(sub, name != "cost");
  for (const char* name : {"nearest", "cost", "verify"}) {
    subs[name]
        ->add_option("--direction", config.direction, "up|down")
        ->transform(CLI::CheckedTransformer(directions, CLI::ignore_case));
  }
  subs["cost"]->add_option("--n", config.n, "image exponent n");
  subs["cost"]->add_option("--format", config.format, "csv|jsonl")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  subs["cost"]->add_flag("--decompose", config.decompose, "count after decomposition");
  std::vector<unsigned> ratios;
  subs["compare"]->add_option("--ratios", ratios, "ratio exponents (default 1 2)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream help;
    const int status = app.exit(e, help, help);
    (status == 0 ? out : err) << help.str();
    return status;
  }
  for (const auto& [name, sub] : subs) {
    if (sub->parsed()) config.command = names.at(name);
  }
  if (shots > 0) config.shots = shots;
  if (!ratios.empty()) config.ratios = ratios;
  return run(config, out, err);
}

}  // namespace frqi::cli
