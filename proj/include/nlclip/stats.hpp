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

#include <span>
#include <vector>

namespace nlclip {

/// Central-tendency anchor of the clipping interval. None selects the plain
/// non-local means path (no clipping at all).
enum class Anchor { None, Mean, Median };

/// Clipping state of one search window: the anchor value, the population
/// standard deviation about it, and the closed interval [lower, upper] that
/// retained members must fall into.
struct WindowStats {
  double anchor_value = 0.0;
  double sd = 0.0;
  double lower = 0.0;
  double upper = 0.0;
  Index population = 0;
};

/// Population standard deviation about an arbitrary center: sqrt(sum((v - c)^2) / N).
/// Left-to-right accumulation; the result participates in clip thresholds.
double sd_about(std::span<const double> values, double center);

/// Median with the usual even-count convention (mean of the two middle order
/// statistics). Reorders the span.
double median_in_place(std::span<double> values);

/// Median of a copy of `values`.
double median_of(std::span<const double> values);

/// Anchor, spread and clip limits of a window population. `anchor` must be
/// Mean or Median.
WindowStats clip_limits(std::span<const double> values, Anchor anchor);

/// Indices of the values retained by the closed interval [stats.lower, stats.upper].
std::vector<Index> clipped_members(std::span<const double> values, const WindowStats& stats);

}  // namespace nlclip
