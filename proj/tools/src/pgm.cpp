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

#include "frqi/cli/pgm.hpp"

#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>

#include "frqi/error.hpp"

namespace frqi::cli {
namespace {

void skip_space_and_comments(std::istream& in) {
  for (;;) {
    const int c = in.peek();
    if (c == '#') {
      std::string line;
      std::getline(in, line);
    } else if (c != EOF && std::isspace(c)) {
      in.get();
    } else {
      return;
    }
  }
}

long read_header_int(std::istream& in, const char* what) {
  skip_space_and_comments(in);
  long value = -1;
  if (!(in >> value) || value < 0) {
    throw InvalidArgumentError(std::string("malformed PGM: bad ") + what);
  }
  return value;
}

std::uint8_t rescale(long sample, long maxval) {
  if (sample > maxval) throw InvalidArgumentError("malformed PGM: sample exceeds maxval");
  if (maxval == 255) return static_cast<std::uint8_t>(sample);
  return static_cast<std::uint8_t>((sample * 255 + maxval / 2) / maxval);
}

}  // namespace

GrayImage read_pgm(std::istream& in) {
  char magic[2] = {0, 0};
  if (!in.read(magic, 2) || magic[0] != 'P' || (magic[1] != '5' && magic[1] != '2')) {
    throw InvalidArgumentError("malformed PGM: expected P5 or P2 magic");
  }
  const bool binary = magic[1] == '5';
  const long width = read_header_int(in, "width");
  const long height = read_header_int(in, "height");
  const long maxval = read_header_int(in, "maxval");
  if (maxval < 1 || maxval > 255) {
    throw InvalidArgumentError("unsupported PGM maxval " + std::to_string(maxval));
  }
  if (width != height || !is_power_of_two(static_cast<std::uint64_t>(width))) {
    throw InvalidArgumentError("image must be square with a power-of-two side, got " +
                               std::to_string(width) + "x" + std::to_string(height));
  }
  const auto count = static_cast<std::size_t>(width * height);
  std::vector<std::uint8_t> pixels(count);
  if (binary) {
    if (!std::isspace(in.get())) throw InvalidArgumentError("malformed PGM header");
    if (!in.read(reinterpret_cast<char*>(pixels.data()), static_cast<std::streamsize>(count))) {
      throw InvalidArgumentError("malformed PGM: truncated pixel data");
    }
    for (auto& p : pixels) p = rescale(p, maxval);
  } else {
    for (auto& p : pixels) p = rescale(read_header_int(in, "sample"), maxval);
  }
  return GrayImage(static_cast<std::size_t>(width), std::move(pixels));
}

GrayImage read_pgm_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  return read_pgm(in);
}

void write_pgm(std::ostream& out, const GrayImage& image) {
  out << "P5\n" << image.side() << ' ' << image.side() << "\n255\n";
  out.write(reinterpret_cast<const char*>(image.pixels().data()),
            static_cast<std::streamsize>(image.size()));
}

void write_pgm_file(const std::string& path, const GrayImage& image) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  write_pgm(out, image);
  if (!out) throw Error("write failed for " + path);
}

}  // namespace frqi::cli
