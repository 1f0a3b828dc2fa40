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

#include "frqi/metrics/metrics.hpp"

#include <cmath>
#include <string>

#include "frqi/error.hpp"

namespace frqi::metrics {
namespace {

void require_same_size(const GrayImage& a, const GrayImage& b) {
  if (a.side() != b.side()) {
    throw InvalidArgumentError("image sizes differ: " + std::to_string(a.side()) + " vs " +
                               std::to_string(b.side()));
  }
}

// Valid-region separable filter of a side x side plane.
std::vector<double> filter(const std::vector<double>& plane, std::size_t side,
                           const std::vector<double>& taps) {
  const std::size_t k = taps.size();
  const std::size_t out_side = side - k + 1;
  std::vector<double> rows(side * out_side);
  for (std::size_t y = 0; y < side; ++y) {
    for (std::size_t x = 0; x < out_side; ++x) {
      double acc = 0.0;
      for (std::size_t t = 0; t < k; ++t) acc += taps[t] * plane[y * side + x + t];
      rows[y * out_side + x] = acc;
    }
  }
  std::vector<double> out(out_side * out_side);
  for (std::size_t y = 0; y < out_side; ++y) {
    for (std::size_t x = 0; x < out_side; ++x) {
      double acc = 0.0;
      for (std::size_t t = 0; t < k; ++t) acc += taps[t] * rows[(y + t) * out_side + x];
      out[y * out_side + x] = acc;
    }
  }
  return out;
}

}  // namespace

double psnr(const GrayImage& a, const GrayImage& b) {
  require_same_size(a, b);
  double sse = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = static_cast<double>(a.pixels()[i]) - static_cast<double>(b.pixels()[i]);
    sse += d * d;
  }
  if (sse == 0.0) return kInfinitePsnr;
  const double mse = sse / static_cast<double>(a.size());
  return 10.0 * std::log10(255.0 * 255.0 / mse);
}

std::vector<double> gaussian_kernel(int size, double sigma) {
  if (size <= 0 || sigma <= 0.0) throw InvalidArgumentError("bad Gaussian window");
  std::vector<double> taps(static_cast<std::size_t>(size));
  const double center = (size - 1) / 2.0;
  double total = 0.0;
  for (int i = 0; i < size; ++i) {
    const double d = i - center;
    taps[static_cast<std::size_t>(i)] = std::exp(-d * d / (2.0 * sigma * sigma));
    total += taps[static_cast<std::size_t>(i)];
  }
  for (double& t : taps) t /= total;
  return taps;
}

double ssim(const GrayImage& a, const GrayImage& b, const SsimParams& params) {
  require_same_size(a, b);
  if (a.side() < static_cast<std::size_t>(params.window)) {
    throw InvalidArgumentError("image smaller than the SSIM window");
  }
  const std::size_t side = a.side();
  const std::size_t count = side * side;
  std::vector<double> pa(count), pb(count), aa(count), bb(count), ab(count);
  for (std::size_t i = 0; i < count; ++i) {
    pa[i] = a.pixels()[i];
    pb[i] = b.pixels()[i];
    aa[i] = pa[i] * pa[i];
    bb[i] = pb[i] * pb[i];
    ab[i] = pa[i] * pb[i];
  }
  const auto taps = gaussian_kernel(params.window, params.sigma);
  const auto mu_a = filter(pa, side, taps);
  const auto mu_b = filter(pb, side, taps);
  const auto e_aa = filter(aa, side, taps);
  const auto e_bb = filter(bb, side, taps);
  const auto e_ab = filter(ab, side, taps);

  const double c1 = std::pow(params.k1 * params.dynamic_range, 2);
  const double c2 = std::pow(params.k2 * params.dynamic_range, 2);
  double total = 0.0;
  for (std::size_t i = 0; i < mu_a.size(); ++i) {
    const double ma = mu_a[i];
    const double mb = mu_b[i];
    const double va = e_aa[i] - ma * ma;
    const double vb = e_bb[i] - mb * mb;
    const double cov = e_ab[i] - ma * mb;
    total += ((2 * ma * mb + c1) * (2 * cov + c2)) /
             ((ma * ma + mb * mb + c1) * (va + vb + c2));
  }
  return total / static_cast<double>(mu_a.size());
}

MetricReport compare(const GrayImage& reference, const GrayImage& test) {
  return {psnr(reference, test), ssim(reference, test)};
}

}  // namespace frqi::metrics
