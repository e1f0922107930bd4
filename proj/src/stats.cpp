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

#include "nlclip/stats.hpp"

#include <algorithm>
#include <cmath>

namespace nlclip {

double sd_about(std::span<const double> values, double center) {
  detail::require(!values.empty(), "sd_about: empty population");
  double sum_sq = 0.0;
  for (const double v : values) {
    const double d = v - center;
    sum_sq += d * d;
  }
  return std::sqrt(sum_sq / static_cast<double>(values.size()));
}

double median_in_place(std::span<double> values) {
  detail::require(!values.empty(), "median: empty population");
  const std::size_t n = values.size();
  const std::size_t mid = n / 2;
  std::nth_element(values.begin(), values.begin() + mid, values.end());
  const double upper_mid = values[mid];
  if (n % 2 == 1) return upper_mid;
  // Even count: mean of the two middle order statistics.
  std::nth_element(values.begin(), values.begin() + (mid - 1), values.begin() + mid);
  return (values[mid - 1] + upper_mid) / 2.0;
}

double median_of(std::span<const double> values) {
  std::vector<double> copy(values.begin(), values.end());
  return median_in_place(copy);
}

WindowStats clip_limits(std::span<const double> values, Anchor anchor) {
  detail::require(!values.empty(), "clip_limits: empty population");
  detail::require(anchor == Anchor::Mean || anchor == Anchor::Median,
                  "clip_limits: anchor must be Mean or Median");
  WindowStats stats;
  stats.population = static_cast<Index>(values.size());
  if (anchor == Anchor::Mean) {
    double sum = 0.0;
    for (const double v : values) sum += v;
    stats.anchor_value = sum / static_cast<double>(values.size());
  } else {
    stats.anchor_value = median_of(values);
  }
  stats.sd = sd_about(values, stats.anchor_value);
  stats.lower = stats.anchor_value - stats.sd;
  stats.upper = stats.anchor_value + stats.sd;
  return stats;
}

std::vector<Index> clipped_members(std::span<const double> values, const WindowStats& stats) {
  std::vector<Index> members;
  members.reserve(values.size());
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (values[k] >= stats.lower && values[k] <= stats.upper) {
      members.push_back(static_cast<Index>(k));
    }
  }
  return members;
}

}  // namespace nlclip
