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

#include "nlclip/bench.hpp"

#include "nlclip/filter.hpp"
#include "nlclip/metrics.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>

namespace nlclip {

std::string_view method_name(Method method) {
  switch (method) {
    case Method::Nlm: return "nlm";
    case Method::Nlscem: return "nlscem";
    case Method::Nlacm: return "nlacm";
  }
  return "unknown";
}

Anchor method_anchor(Method method) {
  switch (method) {
    case Method::Nlm: return Anchor::None;
    case Method::Nlscem: return Anchor::Mean;
    case Method::Nlacm: return Anchor::Median;
  }
  return Anchor::None;
}

std::optional<Method> parse_method(std::string_view name) {
  if (name == "nlm") return Method::Nlm;
  if (name == "nlscem") return Method::Nlscem;
  if (name == "nlacm") return Method::Nlacm;
  return std::nullopt;
}

std::string format_g6(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", value);
  return buf;
}

std::string format_psnr(double value) {
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.2f", value);
  return buf;
}

std::vector<BenchRecord> run_sweep(const BenchConfig& config) {
  detail::require(config.image.size() > 0, "run_sweep: missing clean image");
  detail::require(!config.variances.empty() && !config.seeds.empty() && !config.methods.empty(),
                  "run_sweep: variances, seeds and methods must be non-empty");
  std::vector<BenchRecord> records;
  records.reserve(config.variances.size() * config.seeds.size() * config.methods.size());
  for (const double variance : config.variances) {
    const double h = config.fixed_h ? *config.fixed_h : default_h(variance);
    for (const std::uint64_t seed : config.seeds) {
      const Image noisy = add_speckle(
          config.image, NoiseSpec{variance, seed, config.noise_kind, config.clamp_noise});
      for (const Method method : config.methods) {
        FilterParams params;
        params.search = config.search;
        params.patch = config.patch;
        params.smoothing = h;
        params.anchor = method_anchor(method);
        const auto start = std::chrono::steady_clock::now();
        const Image denoised = denoise(noisy, params, config.threads);
        const auto stop = std::chrono::steady_clock::now();
        BenchRecord record;
        record.image_id = config.image_id;
        record.method = method;
        record.variance = variance;
        record.seed = seed;
        record.psnr_db = psnr(config.image, denoised);
        record.wall_ms =
            config.measure_time
                ? std::chrono::duration<double, std::milli>(stop - start).count()
                : 0.0;
        records.push_back(std::move(record));
      }
    }
  }
  return records;
}

std::string to_csv(const std::vector<BenchRecord>& records) {
  std::string csv = "image,method,variance,seed,psnr_db,wall_ms\n";
  for (const BenchRecord& record : records) {
    csv += record.image_id;
    csv += ',';
    csv += method_name(record.method);
    csv += ',';
    csv += format_g6(record.variance);
    csv += ',';
    csv += std::to_string(record.seed);
    csv += ',';
    csv += format_psnr(record.psnr_db);
    csv += ',';
    csv += format_g6(record.wall_ms);
    csv += '\n';
  }
  return csv;
}

namespace {

struct SeriesPoint {
  double variance;
  double mean_psnr;
};

constexpr int kWidth = 640;
constexpr int kHeight = 480;
constexpr int kMarginLeft = 64;
constexpr int kMarginRight = 24;
constexpr int kMarginTop = 24;
constexpr int kMarginBottom = 48;

const char* series_color(Method method) {
  switch (method) {
    case Method::Nlm: return "#d62728";
    case Method::Nlscem: return "#1f77b4";
    case Method::Nlacm: return "#2ca02c";
  }
  return "#000000";
}

}  // namespace

std::string render_svg(const std::vector<BenchRecord>& records) {
  // Seed-averaged PSNR per (method, variance); infinite values are skipped.
  std::map<Method, std::map<double, std::pair<double, int>>> sums;
  for (const BenchRecord& record : records) {
    if (std::isinf(record.psnr_db)) continue;
    auto& cell = sums[record.method][record.variance];
    cell.first += record.psnr_db;
    cell.second += 1;
  }
  std::map<Method, std::vector<SeriesPoint>> series;
  double min_x = 0, max_x = 1, min_y = 0, max_y = 1;
  bool first = true;
  for (const auto& [method, by_variance] : sums) {
    for (const auto& [variance, sum_count] : by_variance) {
      const double mean = sum_count.first / sum_count.second;
      series[method].push_back({variance, mean});
      if (first) {
        min_x = max_x = variance;
        min_y = max_y = mean;
        first = false;
      } else {
        min_x = std::min(min_x, variance);
        max_x = std::max(max_x, variance);
        min_y = std::min(min_y, mean);
        max_y = std::max(max_y, mean);
      }
    }
  }
  if (max_x == min_x) max_x = min_x + 1.0;
  if (max_y == min_y) max_y = min_y + 1.0;

  const double plot_w = kWidth - kMarginLeft - kMarginRight;
  const double plot_h = kHeight - kMarginTop - kMarginBottom;
  auto sx = [&](double x) { return kMarginLeft + (x - min_x) / (max_x - min_x) * plot_w; };
  auto sy = [&](double y) { return kMarginTop + (max_y - y) / (max_y - min_y) * plot_h; };

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " +
         std::to_string(kWidth) + " " + std::to_string(kHeight) + "\">\n";
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  // axes
  svg += "<line x1=\"" + format_g6(kMarginLeft) + "\" y1=\"" + format_g6(kMarginTop) +
         "\" x2=\"" + format_g6(kMarginLeft) + "\" y2=\"" +
         format_g6(kHeight - kMarginBottom) + "\" stroke=\"black\"/>\n";
  svg += "<line x1=\"" + format_g6(kMarginLeft) + "\" y1=\"" +
         format_g6(kHeight - kMarginBottom) + "\" x2=\"" + format_g6(kWidth - kMarginRight) +
         "\" y2=\"" + format_g6(kHeight - kMarginBottom) + "\" stroke=\"black\"/>\n";
  svg += "<text x=\"" + format_g6(kWidth / 2.0) + "\" y=\"" + format_g6(kHeight - 12.0) +
         "\" text-anchor=\"middle\" font-size=\"14\">noise variance</text>\n";
  svg += "<text x=\"16\" y=\"" + format_g6(kHeight / 2.0) +
         "\" text-anchor=\"middle\" font-size=\"14\" transform=\"rotate(-90 16 " +
         format_g6(kHeight / 2.0) + ")\">PSNR (dB)</text>\n";
  svg += "<text x=\"" + format_g6(kMarginLeft) + "\" y=\"" + format_g6(kHeight - 28.0) +
         "\" font-size=\"12\">" + format_g6(min_x) + "</text>\n";
  svg += "<text x=\"" + format_g6(kWidth - kMarginRight) + "\" y=\"" +
         format_g6(kHeight - 28.0) + "\" text-anchor=\"end\" font-size=\"12\">" +
         format_g6(max_x) + "</text>\n";
  svg += "<text x=\"" + format_g6(kMarginLeft - 6.0) + "\" y=\"" +
         format_g6(kHeight - kMarginBottom) + "\" text-anchor=\"end\" font-size=\"12\">" +
         format_g6(min_y) + "</text>\n";
  svg += "<text x=\"" + format_g6(kMarginLeft - 6.0) + "\" y=\"" +
         format_g6(kMarginTop + 4.0) + "\" text-anchor=\"end\" font-size=\"12\">" +
         format_g6(max_y) + "</text>\n";

  int legend_row = 0;
  for (const auto& [method, points] : series) {
    std::string polyline;
    for (const SeriesPoint& point : points) {
      if (!polyline.empty()) polyline += ' ';
      polyline += format_g6(sx(point.variance)) + "," + format_g6(sy(point.mean_psnr));
    }
    svg += "<polyline fill=\"none\" stroke=\"" + std::string(series_color(method)) +
           "\" stroke-width=\"2\" points=\"" + polyline + "\"/>\n";
    const double ly = kMarginTop + 16.0 + 18.0 * legend_row++;
    svg += "<line x1=\"" + format_g6(kWidth - kMarginRight - 120.0) + "\" y1=\"" +
           format_g6(ly - 4.0) + "\" x2=\"" + format_g6(kWidth - kMarginRight - 96.0) +
           "\" y2=\"" + format_g6(ly - 4.0) + "\" stroke=\"" + series_color(method) +
           "\" stroke-width=\"2\"/>\n";
    svg += "<text x=\"" + format_g6(kWidth - kMarginRight - 90.0) + "\" y=\"" +
           format_g6(ly) + "\" font-size=\"12\">" + std::string(method_name(method)) +
           "</text>\n";
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace nlclip
