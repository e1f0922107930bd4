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

#include <cmath>
#include <limits>
#include <vector>

namespace nlclip {

struct QualityReport {
  double mse = 0.0;
  double psnr_db = 0.0;
};

template <typename Scalar>
double mse(const ImageT<Scalar>& a, const ImageT<Scalar>& b) {
  detail::require(a.rows() == b.rows() && a.cols() == b.cols(), "mse: dimension mismatch");
  detail::require(a.size() > 0, "mse: empty image");
  double sum = 0.0;
  const Scalar* pa = a.data();
  const Scalar* pb = b.data();
  for (Index k = 0; k < a.size(); ++k) {
    const double diff = static_cast<double>(pa[k]) - static_cast<double>(pb[k]);
    sum += diff * diff;
  }
  return sum / static_cast<double>(a.size());
}

/// Peak signal-to-noise ratio in dB against peak amplitude 1.0; identical
/// images yield +infinity.
template <typename Scalar>
double psnr(const ImageT<Scalar>& a, const ImageT<Scalar>& b) {
  const double err = mse(a, b);
  if (err == 0.0) return std::numeric_limits<double>::infinity();
  return 10.0 * std::log10(1.0 / err);
}

template <typename Scalar>
QualityReport measure_quality(const ImageT<Scalar>& a, const ImageT<Scalar>& b) {
  QualityReport report;
  report.mse = mse(a, b);
  report.psnr_db = report.mse == 0.0 ? std::numeric_limits<double>::infinity()
                                     : 10.0 * std::log10(1.0 / report.mse);
  return report;
}

/// One scanline of amplitudes with its column positions.
struct EdgeProfile {
  std::vector<Index> positions;
  Eigen::ArrayXd amplitudes;
};

inline EdgeProfile extract_profile(const Image& img, Index row) {
  detail::require(row >= 0 && row < img.rows(), "extract_profile: row out of range");
  EdgeProfile profile;
  profile.positions.resize(static_cast<std::size_t>(img.cols()));
  profile.amplitudes.resize(img.cols());
  for (Index col = 0; col < img.cols(); ++col) {
    profile.positions[static_cast<std::size_t>(col)] = col;
    profile.amplitudes(col) = img(row, col);
  }
  return profile;
}

/// Root-mean-square difference between two profiles of equal length.
inline double profile_rmse(const EdgeProfile& a, const EdgeProfile& b) {
  detail::require(a.amplitudes.size() == b.amplitudes.size(),
                  "profile_rmse: length mismatch");
  detail::require(a.amplitudes.size() > 0, "profile_rmse: empty profile");
  return std::sqrt((a.amplitudes - b.amplitudes).square().mean());
}

}  // namespace nlclip
