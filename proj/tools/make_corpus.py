#!/usr/bin/env python3
# Copyright 2026 The frqi-interp Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Writes 64x64 grayscale P5 test images from the scikit-image sample set.

Each sample is center-cropped to a square, then area-averaged down to the
target side.
"""

import argparse
import pathlib

import numpy as np
from skimage import color, data

SAMPLES = ("camera", "astronaut", "coffee", "chelsea", "coins", "brick")


def to_gray(image: np.ndarray) -> np.ndarray:
    if image.ndim == 3:
        image = color.rgb2gray(image[..., :3]) * 255.0
    return image.astype(np.float64)


def square_crop(image: np.ndarray, side: int) -> np.ndarray:
    h, w = image.shape
    edge = (min(h, w) // side) * side
    top = (h - edge) // 2
    left = (w - edge) // 2
    return image[top : top + edge, left : left + edge]


def area_average(image: np.ndarray, side: int) -> np.ndarray:
    k = image.shape[0] // side
    return image.reshape(side, k, side, k).mean(axis=(1, 3))


def write_pgm(path: pathlib.Path, pixels: np.ndarray) -> None:
    side = pixels.shape[0]
    with path.open("wb") as f:
        f.write(f"P5\n{side} {side}\n255\n".encode("ascii"))
        f.write(pixels.astype(np.uint8).tobytes())


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", type=pathlib.Path, default=pathlib.Path("tests/data"))
    parser.add_argument("--side", type=int, default=64)
    args = parser.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)
    for name in SAMPLES:
        gray = to_gray(getattr(data, name)())
        small = area_average(square_crop(gray, args.side), args.side)
        write_pgm(args.out / f"{name}.pgm", np.clip(np.rint(small), 0, 255))
        print(args.out / f"{name}.pgm")


if __name__ == "__main__":
    main()
