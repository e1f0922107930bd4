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

namespace nlclip {

/// Reflect coordinate t into [0, n) about the edges, without duplicating the
/// edge sample (period 2(n-1)). A 1-sample axis maps everything to 0; margins
/// larger than the axis repeat cyclically.
constexpr Index mirror_index(Index t, Index n) {
  if (n == 1) return 0;
  const Index period = 2 * (n - 1);
  Index m = t % period;
  if (m < 0) m += period;
  return m < n ? m : period - m;
}

/// Grow the raster by `margin` samples on every side, filling the border by
/// mirror reflection. The interior equals the input exactly.
template <typename Scalar>
ImageT<Scalar> pad_mirror(const ImageT<Scalar>& img, Index margin) {
  detail::require(img.rows() >= 1 && img.cols() >= 1, "pad_mirror: empty image");
  detail::require(margin >= 0, "pad_mirror: negative margin");
  ImageT<Scalar> out(img.rows() + 2 * margin, img.cols() + 2 * margin);
  for (Index row = 0; row < out.rows(); ++row) {
    const Index src_row = mirror_index(row - margin, img.rows());
    for (Index col = 0; col < out.cols(); ++col) {
      out(row, col) = img(src_row, mirror_index(col - margin, img.cols()));
    }
  }
  return out;
}

/// Square block of amplitudes centered on a pixel. `values` is row-major with
/// odd side length; `center_value` duplicates the middle element.
template <typename Scalar>
struct PatchT {
  Index side = 0;
  ImageT<Scalar> values;
  Scalar center_value = Scalar(0);
};

using Patch = PatchT<double>;

/// Copy the side x side block centered at `center`. The caller must have
/// padded the image far enough that the block exists; an out-of-range block
/// throws rather than reflecting implicitly.
template <typename Scalar>
PatchT<Scalar> extract_patch(const ImageT<Scalar>& img, PixelIndex center, Index side) {
  detail::require(side >= 1 && side % 2 == 1, "extract_patch: side must be odd and >= 1");
  const Index half = (side - 1) / 2;
  const bool inside = center.row - half >= 0 && center.col - half >= 0 &&
                      center.row + half < img.rows() && center.col + half < img.cols();
  detail::require(inside, "extract_patch: block out of bounds; pad the image first");
  PatchT<Scalar> patch;
  patch.side = side;
  patch.values = img.block(center.row - half, center.col - half, side, side);
  patch.center_value = img(center.row, center.col);
  return patch;
}

template <typename Scalar>
ImageT<Scalar> flip_horizontal(const ImageT<Scalar>& img) {
  return img.rowwise().reverse();
}

template <typename Scalar>
ImageT<Scalar> flip_vertical(const ImageT<Scalar>& img) {
  return img.colwise().reverse();
}

/// Quarter-turn counterclockwise.
template <typename Scalar>
ImageT<Scalar> rotate90(const ImageT<Scalar>& img) {
  return img.transpose().colwise().reverse();
}

}  // namespace nlclip
