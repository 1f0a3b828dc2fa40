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

#include <iosfwd>
#include <string>
#include <vector>

#include "frqi/image.hpp"

namespace frqi::cli {

/// Reads a square power-of-two PGM, binary (P5) or ASCII (P2). Samples with
/// a maxval other than 255 are rescaled to 0..255.
GrayImage read_pgm(std::istream& in);
GrayImage read_pgm_file(const std::string& path);

/// Writes binary P5 with maxval 255.
void write_pgm(std::ostream& out, const GrayImage& image);
void write_pgm_file(const std::string& path, const GrayImage& image);

}  // namespace frqi::cli
