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

#include "nlclip/noise.hpp"
#include "nlclip/stats.hpp"
#include "nlclip/types.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace nlclip {

enum class Method { Nlm, Nlscem, Nlacm };

std::string_view method_name(Method method);
Anchor method_anchor(Method method);
std::optional<Method> parse_method(std::string_view name);

/// One benchmark measurement: (image, method, noise variance, seed) -> PSNR.
struct BenchRecord {
  std::string image_id;
  Method method = Method::Nlm;
  double variance = 0.0;
  std::uint64_t seed = 0;
  double psnr_db = 0.0;
  double wall_ms = 0.0;
};

struct BenchConfig {
  Image image;                      ///< clean reference
  std::string image_id = "image";
  std::vector<double> variances = {0.01, 0.02, 0.03, 0.04, 0.05,
                                   0.06, 0.07, 0.08, 0.09, 0.10};
  std::vector<std::uint64_t> seeds = {1, 2, 3, 4, 5};
  std::vector<Method> methods = {Method::Nlm, Method::Nlscem, Method::Nlacm};
  int search = 10;
  int patch = 3;
  std::optional<double> fixed_h;    ///< overrides the per-variance default h
  NoiseKind noise_kind = NoiseKind::Uniform;
  /// The sweep corrupts without clamping by default: strong multiplicative
  /// noise overshoots [0, 1], and squashing it flattens the method orderings
  /// the harness exists to measure. Filters clamp their output either way.
  bool clamp_noise = false;
  bool measure_time = false;        ///< when off, wall_ms is reported as 0 so CSV bytes are reproducible
  int threads = 0;
};

/// Corrupt, denoise and score every (variance, seed, method) combination.
/// Records come out variance-major, then seed, then method, so equal configs
/// produce identical output.
std::vector<BenchRecord> run_sweep(const BenchConfig& config);

/// Flat CSV with header image,method,variance,seed,psnr_db,wall_ms.
/// PSNR uses two decimals (inf spelled "inf"), other floats six significant
/// digits, '.' decimal separator, '\n' line endings.
std::string to_csv(const std::vector<BenchRecord>& records);

/// Static polyline chart of PSNR (seed-averaged) versus variance, one series
/// per method.
std::string render_svg(const std::vector<BenchRecord>& records);

/// "%.6g" with the C locale.
std::string format_g6(double value);
/// Two-decimal dB value; infinity prints "inf".
std::string format_psnr(double value);

}  // namespace nlclip
