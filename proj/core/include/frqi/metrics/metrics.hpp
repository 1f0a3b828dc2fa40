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

#include <limits>
#include <vector>

#include "frqi/image.hpp"

namespace frqi::metrics {

inline constexpr double kInfinitePsnr = std::numeric_limits<double>::infinity();

struct SsimParams {
  int window = 11;
  double sigma = 1.5;
  double k1 = 0.01;
  double k2 = 0.03;
  double dynamic_range = 255.0;
};

struct MetricReport {
  double psnr_db = 0.0;
  double ssim = 0.0;
};

/// 10 log10(255^2 / MSE); kInfinitePsnr for identical images.
double psnr(const GrayImage& a, const GrayImage& b);

/// Normalized 1-D Gaussian taps; the 2-D window is their outer product.
std::vector<double> gaussian_kernel(int size, double sigma);

/// Mean SSIM over every fully contained window (no padding). Throws
/// InvalidArgumentError on a size mismatch or an image smaller than the window.
double ssim(const GrayImage& a, const GrayImage& b, const SsimParams& params = {});

MetricReport compare(const GrayImage& reference, const GrayImage& test);

}  // namespace frqi::metrics
