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

#include <Eigen/Core>

#include <stdexcept>
#include <string>

namespace nlclip {

using Index = Eigen::Index;

/// Dense grayscale raster, row-major, (row, col) indexed.
/// Amplitudes are normalized to [0, 1]; producers (I/O, generators, filters)
/// are responsible for keeping the range invariant.
template <typename Scalar>
using ImageT = Eigen::Array<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

using Image = ImageT<double>;

struct PixelIndex {
  Index row = 0;
  Index col = 0;
};

namespace detail {

inline void require(bool condition, const std::string& what) {
  if (!condition) throw std::invalid_argument(what);
}

}  // namespace detail

/// True when the raster is non-empty and every amplitude lies in [0, 1].
template <typename Scalar>
bool is_normalized(const ImageT<Scalar>& img) {
  if (img.size() == 0) return false;
  return ((img >= Scalar(0)) && (img <= Scalar(1))).all();
}

}  // namespace nlclip
