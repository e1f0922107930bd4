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

#include "nlclip/metrics.hpp"

#include "nlclip/noise.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace nlclip;

namespace {

Image random_image(Index rows, Index cols, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Image img(rows, cols);
  for (Index r = 0; r < rows; ++r) {
    for (Index c = 0; c < cols; ++c) {
      img(r, c) = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    }
  }
  return img;
}

}  // namespace

TEST_CASE("mse: identical, constant offset, loop cross-check") {
  const Image a = random_image(6, 5, 3);
  CHECK(mse(a, a) == 0.0);

  const Image zero = Image::Zero(4, 4);
  const Image tenth = Image::Constant(4, 4, 0.1);
  CHECK(mse(zero, tenth) == doctest::Approx(0.01).epsilon(1e-12));

  const Image b = random_image(6, 5, 4);
  double sum = 0.0;
  for (Index r = 0; r < a.rows(); ++r) {
    for (Index c = 0; c < a.cols(); ++c) {
      const double d = a(r, c) - b(r, c);
      sum += d * d;
    }
  }
  CHECK(mse(a, b) == doctest::Approx(sum / a.size()).epsilon(1e-12));

  const Image wrong = Image::Zero(5, 6);
  CHECK_THROWS_AS(mse(a, wrong), std::invalid_argument);
}

TEST_CASE("psnr: analytic values and the infinity sentinel") {
  const Image zero = Image::Zero(8, 8);
  CHECK(psnr(zero, Image(Image::Constant(8, 8, 0.1))) == doctest::Approx(20.0).epsilon(1e-9));
  CHECK(psnr(zero, Image(Image::Constant(8, 8, 0.5))) == doctest::Approx(6.0206).epsilon(1e-4));
  CHECK(std::isinf(psnr(zero, zero)));
  const QualityReport report = measure_quality(zero, zero);
  CHECK(report.mse == 0.0);
  CHECK(std::isinf(report.psnr_db));
}

TEST_CASE("psnr is symmetric and strictly decreasing in mse") {
  const Image a = random_image(8, 8, 10);
  const Image b = random_image(8, 8, 11);
  CHECK(psnr(a, b) == psnr(b, a));

  const Image zero = Image::Zero(8, 8);
  double previous = psnr(zero, Image(Image::Constant(8, 8, 0.05)));
  for (const double level : {0.1, 0.2, 0.4, 0.8}) {
    const double current = psnr(zero, Image(Image::Constant(8, 8, level)));
    CHECK(current < previous);
    previous = current;
  }
}

TEST_CASE("extract_profile: step image yields the exact step") {
  const Image img = generate_step_edge(8, 4, 0.0, 1.0);
  const EdgeProfile profile = extract_profile(img, 2);
  REQUIRE(profile.amplitudes.size() == 8);
  for (Index c = 0; c < 8; ++c) {
    CHECK(profile.positions[static_cast<std::size_t>(c)] == c);
    CHECK(profile.amplitudes(c) == (c < 4 ? 0.0 : 1.0));
  }
}

TEST_CASE("extract_profile: checker scanline alternates in plateaus") {
  const Image img = generate_checker(16, 16, 4, 0.0, 1.0);
  const EdgeProfile profile = extract_profile(img, 2);  // inside the first band
  for (Index c = 0; c < 16; ++c) {
    const double expected = ((c / 4) % 2 == 0) ? 1.0 : 0.0;
    CHECK(profile.amplitudes(c) == expected);
  }
}

TEST_CASE("extract_profile: single-column image and range errors") {
  Image img(3, 1);
  img << 0.1, 0.2, 0.3;
  const EdgeProfile profile = extract_profile(img, 1);
  CHECK(profile.amplitudes.size() == 1);
  CHECK(profile.amplitudes(0) == 0.2);
  CHECK_THROWS_AS(extract_profile(img, 3), std::invalid_argument);
  CHECK_THROWS_AS(extract_profile(img, -1), std::invalid_argument);
}

TEST_CASE("profile_rmse: identity, offset, loop cross-check") {
  const Image img = random_image(4, 16, 77);
  const EdgeProfile a = extract_profile(img, 1);
  CHECK(profile_rmse(a, a) == 0.0);

  EdgeProfile shifted = a;
  shifted.amplitudes += 0.1;
  CHECK(profile_rmse(a, shifted) == doctest::Approx(0.1).epsilon(1e-12));

  const EdgeProfile b = extract_profile(img, 2);
  double sum = 0.0;
  for (Index c = 0; c < 16; ++c) {
    const double d = a.amplitudes(c) - b.amplitudes(c);
    sum += d * d;
  }
  CHECK(profile_rmse(a, b) == doctest::Approx(std::sqrt(sum / 16.0)).epsilon(1e-12));

  EdgeProfile all;
  all.positions = {0};
  all.amplitudes.resize(1);
  CHECK_THROWS_AS(profile_rmse(a, all), std::invalid_argument);
}
