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

// Patch-based denoising filters: plain non-local means, and two sigma-clipped
// variants that restrict the weighted mean to window members whose patch sums
// fall within one standard deviation of a mean (NLSCEM) or median (NLACM)
// anchor.
//
// The per-pixel computation reads only the mirror-padded input, so pixels may
// be partitioned across workers arbitrarily; outputs are bitwise independent
// of the thread count.

#pragma once

#include "nlclip/image.hpp"
#include "nlclip/stats.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <span>
#include <thread>
#include <vector>

namespace nlclip {

struct FilterParams {
  int search = 10;        ///< search-window size; the window spans 2*(search/2)+1 per axis
  int patch = 3;          ///< patch side, odd
  double smoothing = 0.0; ///< decay scale of the exponential weight kernel, > 0
  Anchor anchor = Anchor::None;
};

inline void validate(const FilterParams& params) {
  detail::require(params.search >= 1, "FilterParams: search must be >= 1");
  detail::require(params.patch >= 1 && params.patch % 2 == 1,
                  "FilterParams: patch side must be odd and >= 1");
  detail::require(params.smoothing > 0.0 && std::isfinite(params.smoothing),
                  "FilterParams: smoothing must be positive and finite");
}

/// Smoothing parameter from the noise variance: 10 * variance * 100 / 255.
inline double default_h(double noise_variance) {
  detail::require(noise_variance > 0.0, "default_h: variance must be positive");
  return 10.0 * noise_variance * 100.0 / 255.0;
}

/// Similarity weight exp(-d^2 / h^2) with d^2 the raw squared Euclidean
/// distance between the two patches (no normalization by the patch area).
template <typename Scalar>
double patch_weight(const PatchT<Scalar>& a, const PatchT<Scalar>& b, double h) {
  detail::require(a.side == b.side, "patch_weight: mismatched patch sides");
  detail::require(h > 0.0, "patch_weight: h must be positive");
  double dist_sq = 0.0;
  const Scalar* pa = a.values.data();
  const Scalar* pb = b.values.data();
  const Index count = a.side * a.side;
  for (Index k = 0; k < count; ++k) {
    const double diff = static_cast<double>(pa[k]) - static_cast<double>(pb[k]);
    dist_sq += diff * diff;
  }
  return std::exp(-dist_sq / (h * h));
}

/// Sum of all patch amplitudes, row-major left-to-right.
template <typename Scalar>
double patch_sum(const PatchT<Scalar>& p) {
  double sum = 0.0;
  const Scalar* values = p.values.data();
  const Index count = p.side * p.side;
  for (Index k = 0; k < count; ++k) sum += static_cast<double>(values[k]);
  return sum;
}

struct WeightEntry {
  Index row_offset = 0;
  Index col_offset = 0;
  double weight = 0.0;
};

namespace detail {

inline int effective_threads(int threads, Index rows) {
  if (threads <= 0) {
    const unsigned hw = std::thread::hardware_concurrency();
    threads = hw == 0 ? 1 : static_cast<int>(hw);
  }
  if (static_cast<Index>(threads) > rows) threads = static_cast<int>(rows);
  return threads < 1 ? 1 : threads;
}

/// Runs body(row, scratch) for every row, work-stealing over a shared counter.
/// Scratch is per-worker; rows write disjoint output so any partition yields
/// identical results.
template <typename Scratch, typename Body>
void for_each_row(Index rows, int threads, Body&& body) {
  threads = effective_threads(threads, rows);
  if (threads == 1) {
    Scratch scratch;
    for (Index row = 0; row < rows; ++row) body(row, scratch);
    return;
  }
  std::atomic<Index> next{0};
  std::exception_ptr error;
  std::atomic<bool> failed{false};
  auto worker = [&] {
    Scratch scratch;
    try {
      for (Index row = next.fetch_add(1); row < rows; row = next.fetch_add(1)) {
        body(row, scratch);
      }
    } catch (...) {
      if (!failed.exchange(true)) error = std::current_exception();
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(threads));
  for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& thread : pool) thread.join();
  if (error) std::rethrow_exception(error);
}

struct WindowScratch {
  std::vector<double> weight;
  std::vector<double> value;
  std::vector<double> sum;
  std::vector<double> order;  // median workspace
};

/// Patch sums for every padded coordinate with a full patch around it.
/// Plain row-major r*r summation; these sums feed the clip thresholds, so
/// the accumulation order is fixed.
template <typename Scalar>
ImageT<double> patch_sum_plane(const ImageT<Scalar>& padded, Index half_patch) {
  const Index side = 2 * half_patch + 1;
  ImageT<double> sums = ImageT<double>::Zero(padded.rows(), padded.cols());
  for (Index row = half_patch; row < padded.rows() - half_patch; ++row) {
    for (Index col = half_patch; col < padded.cols() - half_patch; ++col) {
      double acc = 0.0;
      for (Index py = 0; py < side; ++py) {
        const Scalar* src = &padded(row - half_patch + py, col - half_patch);
        for (Index px = 0; px < side; ++px) acc += static_cast<double>(src[px]);
      }
      sums(row, col) = acc;
    }
  }
  return sums;
}

/// Fills the scratch arrays with (weight, center value, patch sum) for every
/// window member of the pixel at padded coordinates (prow, pcol), in row-major
/// window order. `sums` may be null when clipping is off.
template <typename Scalar>
void gather_window(const ImageT<Scalar>& padded, const ImageT<double>* sums,
                   Index prow, Index pcol, Index half_win, Index half_patch,
                   double h_sq, WindowScratch& scratch) {
  const Index win_side = 2 * half_win + 1;
  const Index count = win_side * win_side;
  const Index patch_side = 2 * half_patch + 1;
  scratch.weight.resize(static_cast<std::size_t>(count));
  scratch.value.resize(static_cast<std::size_t>(count));
  if (sums != nullptr) scratch.sum.resize(static_cast<std::size_t>(count));
  std::size_t k = 0;
  for (Index dy = -half_win; dy <= half_win; ++dy) {
    for (Index dx = -half_win; dx <= half_win; ++dx, ++k) {
      double dist_sq = 0.0;
      for (Index py = -half_patch; py <= half_patch; ++py) {
        const Scalar* own = &padded(prow + py, pcol - half_patch);
        const Scalar* other = &padded(prow + dy + py, pcol + dx - half_patch);
        for (Index px = 0; px < patch_side; ++px) {
          const double diff = static_cast<double>(own[px]) - static_cast<double>(other[px]);
          dist_sq += diff * diff;
        }
      }
      scratch.weight[k] = std::exp(-dist_sq / h_sq);
      scratch.value[k] = static_cast<double>(padded(prow + dy, pcol + dx));
      if (sums != nullptr) scratch.sum[k] = (*sums)(prow + dy, pcol + dx);
    }
  }
}

/// Weighted mean accumulated about the center value. For a constant window
/// every difference is exactly zero, which keeps constant images bitwise
/// fixed points of all three filters.
inline double weighted_mean_about(double center, std::span<const double> weights,
                                  std::span<const double> values) {
  double num = 0.0;
  double den = 0.0;
  for (std::size_t k = 0; k < weights.size(); ++k) {
    num += weights[k] * (values[k] - center);
    den += weights[k];
  }
  return center + num / den;
}

inline double reduce_window(Anchor anchor, double center, WindowScratch& scratch) {
  if (anchor == Anchor::None) {
    return weighted_mean_about(center, scratch.weight, scratch.value);
  }
  // Anchor, spread and limits of the patch-sum population. Same formulas as
  // clip_limits; inlined on scratch storage to avoid per-pixel allocation.
  const std::size_t count = scratch.sum.size();
  double anchor_value;
  if (anchor == Anchor::Mean) {
    double sum = 0.0;
    for (const double p : scratch.sum) sum += p;
    anchor_value = sum / static_cast<double>(count);
  } else {
    scratch.order.assign(scratch.sum.begin(), scratch.sum.end());
    anchor_value = median_in_place(scratch.order);
  }
  double sum_sq = 0.0;
  for (const double p : scratch.sum) {
    const double d = p - anchor_value;
    sum_sq += d * d;
  }
  const double sd = std::sqrt(sum_sq / static_cast<double>(count));
  const double lower = anchor_value - sd;
  const double upper = anchor_value + sd;

  double num = 0.0;
  double den = 0.0;
  for (std::size_t k = 0; k < count; ++k) {
    if (scratch.sum[k] >= lower && scratch.sum[k] <= upper) {
      num += scratch.weight[k] * (scratch.value[k] - center);
      den += scratch.weight[k];
    }
  }
  // Degenerate clipped set (no members, or all weights underflowed): fall
  // back to the unclipped window mean, whose denominator is >= the self
  // weight of 1.
  if (den == 0.0) {
    return weighted_mean_about(center, scratch.weight, scratch.value);
  }
  return center + num / den;
}

template <typename Scalar>
ImageT<Scalar> run_filter(const ImageT<Scalar>& img, const FilterParams& params, int threads) {
  validate(params);
  detail::require(img.rows() >= 1 && img.cols() >= 1, "denoise: empty image");
  const Index half_win = params.search / 2;
  const Index half_patch = (params.patch - 1) / 2;
  const Index margin = half_win + half_patch;
  const ImageT<Scalar> padded = pad_mirror(img, margin);
  const bool clipping = params.anchor != Anchor::None;
  ImageT<double> sums;
  if (clipping) sums = patch_sum_plane(padded, half_patch);
  const ImageT<double>* sums_ptr = clipping ? &sums : nullptr;
  const double h_sq = params.smoothing * params.smoothing;

  ImageT<Scalar> out(img.rows(), img.cols());
  for_each_row<WindowScratch>(img.rows(), threads, [&](Index row, WindowScratch& scratch) {
    const Index prow = row + margin;
    for (Index col = 0; col < img.cols(); ++col) {
      const Index pcol = col + margin;
      gather_window(padded, sums_ptr, prow, pcol, half_win, half_patch, h_sq, scratch);
      const double center = static_cast<double>(padded(prow, pcol));
      const double mean = reduce_window(params.anchor, center, scratch);
      out(row, col) = static_cast<Scalar>(std::clamp(mean, 0.0, 1.0));
    }
  });
  return out;
}

}  // namespace detail

/// Similarity weights of every window member of `center`, in row-major window
/// order. Offsets are relative to the center pixel; the self entry carries
/// weight exp(0) = 1.
template <typename Scalar>
std::vector<WeightEntry> window_weights(const ImageT<Scalar>& img, PixelIndex center,
                                        const FilterParams& params) {
  validate(params);
  detail::require(center.row >= 0 && center.row < img.rows() &&
                      center.col >= 0 && center.col < img.cols(),
                  "window_weights: center out of range");
  const Index half_win = params.search / 2;
  const Index half_patch = (params.patch - 1) / 2;
  const Index margin = half_win + half_patch;
  const ImageT<Scalar> padded = pad_mirror(img, margin);
  detail::WindowScratch scratch;
  detail::gather_window(padded, static_cast<const ImageT<double>*>(nullptr),
                        center.row + margin, center.col + margin, half_win, half_patch,
                        params.smoothing * params.smoothing, scratch);
  std::vector<WeightEntry> entries;
  entries.reserve(scratch.weight.size());
  std::size_t k = 0;
  for (Index dy = -half_win; dy <= half_win; ++dy) {
    for (Index dx = -half_win; dx <= half_win; ++dx, ++k) {
      entries.push_back({dy, dx, scratch.weight[k]});
    }
  }
  return entries;
}

/// Plain non-local means: every output pixel is the similarity-weighted mean
/// of its search window, self term included with weight 1.
template <typename Scalar>
ImageT<Scalar> denoise_nlm(const ImageT<Scalar>& img, const FilterParams& params,
                           int threads = 0) {
  detail::require(params.anchor == Anchor::None, "denoise_nlm: anchor must be None");
  return detail::run_filter(img, params, threads);
}

/// Sigma-clipped non-local means: the weighted mean is restricted to window
/// members whose patch sum lies within one standard deviation of the anchor
/// (Mean or Median) of the window's patch-sum population.
template <typename Scalar>
ImageT<Scalar> denoise_clipped(const ImageT<Scalar>& img, const FilterParams& params,
                               int threads = 0) {
  detail::require(params.anchor != Anchor::None,
                  "denoise_clipped: anchor must be Mean or Median");
  return detail::run_filter(img, params, threads);
}

/// Routes on params.anchor: None -> denoise_nlm, Mean/Median -> denoise_clipped.
template <typename Scalar>
ImageT<Scalar> denoise(const ImageT<Scalar>& img, const FilterParams& params,
                       int threads = 0) {
  return detail::run_filter(img, params, threads);
}

}  // namespace nlclip
