// Copyright 2026 The nlclip Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "nlclip/noise.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

namespace nlclip {

namespace {

// Unit double in [0, 1) from the top 53 bits of the engine output. Avoids
// std::uniform_real_distribution, whose stream is implementation-defined.
double next_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

Image add_speckle(const Image& img, const NoiseSpec& spec) {
  detail::require(spec.variance > 0.0, "add_speckle: variance must be positive");
  detail::require(img.rows() >= 1 && img.cols() >= 1, "add_speckle: empty image");
  std::mt19937_64 rng(spec.seed);
  Image out(img.rows(), img.cols());
  const double amplitude = std::sqrt(3.0 * spec.variance);  // uniform on [-a, a)
  const double sigma = std::sqrt(spec.variance);
  for (Index row = 0; row < img.rows(); ++row) {
    for (Index col = 0; col < img.cols(); ++col) {
      double factor;
      if (spec.kind == NoiseKind::Uniform) {
        factor = amplitude * (2.0 * next_unit(rng) - 1.0);
      } else {
        const double u1 = next_unit(rng);
        const double u2 = next_unit(rng);
        factor = sigma * std::sqrt(-2.0 * std::log(1.0 - u1)) *
                 std::cos(2.0 * std::numbers::pi * u2);
      }
      const double v = img(row, col);
      const double corrupted = v + factor * v;
      out(row, col) = spec.clamp ? std::clamp(corrupted, 0.0, 1.0) : corrupted;
    }
  }
  return out;
}

Image generate_checker(Index width, Index height, Index square, double low, double high) {
  detail::require(width >= 1 && height >= 1, "generate_checker: empty image");
  detail::require(square >= 1, "generate_checker: square must be >= 1");
  detail::require(0.0 <= low && low < high && high <= 1.0,
                  "generate_checker: need 0 <= low < high <= 1");
  Image img(height, width);
  for (Index row = 0; row < height; ++row) {
    for (Index col = 0; col < width; ++col) {
      img(row, col) = ((row / square + col / square) % 2 == 0) ? high : low;
    }
  }
  return img;
}

Image generate_step_edge(Index width, Index height, double low, double high) {
  detail::require(width >= 2, "generate_step_edge: width must be >= 2");
  detail::require(height >= 1, "generate_step_edge: height must be >= 1");
  detail::require(0.0 <= low && low < high && high <= 1.0,
                  "generate_step_edge: need 0 <= low < high <= 1");
  Image img(height, width);
  const Index split = width / 2;
  for (Index row = 0; row < height; ++row) {
    for (Index col = 0; col < width; ++col) {
      img(row, col) = col < split ? low : high;
    }
  }
  return img;
}

}  // namespace nlclip
