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

#pragma once

#include "nlclip/types.hpp"

#include <cstdint>

namespace nlclip {

enum class NoiseKind { Uniform, Gaussian };

/// Multiplicative (speckle) noise description. The seed fully determines the
/// noise field; draws happen in row-major pixel order.
struct NoiseSpec {
  double variance = 0.0;  ///< variance of the zero-mean factor n, > 0
  std::uint64_t seed = 0;
  NoiseKind kind = NoiseKind::Uniform;
  /// Clamp the corrupted amplitudes back into [0, 1]. Turning this off keeps
  /// the full multiplicative model v * (1 + n), whose strong-noise overshoot
  /// the benchmark harness relies on; file writers clamp at quantization
  /// anyway.
  bool clamp = true;
};

/// Corrupt an image with speckle noise: out = v + n*v (clamped into [0, 1]
/// unless spec.clamp is off), n i.i.d. zero-mean with the requested variance
/// (uniform by default). Deterministic per (image, spec).
Image add_speckle(const Image& img, const NoiseSpec& spec);

/// Checkerboard with `square`-sized tiles; the top-left tile is `high`.
Image generate_checker(Index width, Index height, Index square, double low, double high);

/// Vertical step edge: columns [0, width/2) at `low`, the rest at `high`.
Image generate_step_edge(Index width, Index height, double low, double high);

}  // namespace nlclip
