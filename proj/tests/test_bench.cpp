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

#include <doctest.h>

#include <limits>
#include <string>

using namespace nlclip;

namespace {

BenchConfig small_config() {
  BenchConfig config;
  config.image = generate_checker(16, 16, 4, 0.0, 1.0);
  config.image_id = "checker";
  config.variances = {0.05};
  config.seeds = {1};
  config.search = 4;
  config.patch = 3;
  return config;
}

}  // namespace

TEST_CASE("run_sweep: one record per (variance, seed, method)") {
  const auto records = run_sweep(small_config());
  REQUIRE(records.size() == 3);
  CHECK(records[0].method == Method::Nlm);
  CHECK(records[1].method == Method::Nlscem);
  CHECK(records[2].method == Method::Nlacm);
  for (const BenchRecord& record : records) {
    CHECK(record.image_id == "checker");
    CHECK(record.variance == 0.05);
    CHECK(record.seed == 1);
    CHECK(record.psnr_db > 0.0);
    CHECK(record.wall_ms == 0.0);  // timing off by default
  }
}

TEST_CASE("run_sweep: records are variance-major, then seed, then method") {
  BenchConfig config = small_config();
  config.variances = {0.02, 0.08};
  config.seeds = {1, 2};
  config.methods = {Method::Nlm, Method::Nlacm};
  const auto records = run_sweep(config);
  REQUIRE(records.size() == 8);
  std::size_t k = 0;
  for (const double variance : config.variances) {
    for (const std::uint64_t seed : config.seeds) {
      for (const Method method : config.methods) {
        CHECK(records[k].variance == variance);
        CHECK(records[k].seed == seed);
        CHECK(records[k].method == method);
        ++k;
      }
    }
  }
}

TEST_CASE("run_sweep: identical configs give identical CSV text") {
  const std::string a = to_csv(run_sweep(small_config()));
  const std::string b = to_csv(run_sweep(small_config()));
  CHECK(a == b);
  CHECK(a.starts_with("image,method,variance,seed,psnr_db,wall_ms\n"));
  CHECK(a.find("checker,nlm,0.05,1,") != std::string::npos);
}

TEST_CASE("run_sweep: psnr matches a manual pipeline run") {
  BenchConfig config = small_config();
  config.fixed_h = 0.3;
  const auto records = run_sweep(config);

  const Image noisy =
      add_speckle(config.image, NoiseSpec{0.05, 1, NoiseKind::Uniform, /*clamp=*/false});
  FilterParams params;
  params.search = config.search;
  params.patch = config.patch;
  params.smoothing = 0.3;
  params.anchor = Anchor::None;
  CHECK(records[0].psnr_db == psnr(config.image, denoise(noisy, params)));
}

TEST_CASE("run_sweep rejects empty lists") {
  BenchConfig config = small_config();
  config.variances.clear();
  CHECK_THROWS_AS(run_sweep(config), std::invalid_argument);
}

TEST_CASE("to_csv formats infinity as 'inf' and psnr to two decimals") {
  BenchRecord record;
  record.image_id = "flat";
  record.method = Method::Nlacm;
  record.variance = 0.08;
  record.seed = 9;
  record.psnr_db = std::numeric_limits<double>::infinity();
  record.wall_ms = 0.0;
  BenchRecord finite = record;
  finite.psnr_db = 17.8961;
  const std::string csv = to_csv({record, finite});
  CHECK(csv.find("flat,nlacm,0.08,9,inf,0\n") != std::string::npos);
  CHECK(csv.find("flat,nlacm,0.08,9,17.90,0\n") != std::string::npos);
}

TEST_CASE("run_sweep: median clipping beats plain NLM at variance 0.08 on the default checker") {
  BenchConfig config;
  config.image = generate_checker(256, 256, 32, 0.0, 1.0);
  config.image_id = "checker";
  config.variances = {0.08};
  config.seeds = {3};
  config.methods = {Method::Nlm, Method::Nlacm};
  const auto records = run_sweep(config);
  REQUIRE(records.size() == 2);
  CHECK(records[1].psnr_db > records[0].psnr_db);
}

TEST_CASE("method names round-trip") {
  for (const Method method : {Method::Nlm, Method::Nlscem, Method::Nlacm}) {
    CHECK(parse_method(method_name(method)) == method);
  }
  CHECK(!parse_method("nl-means").has_value());
}

TEST_CASE("render_svg draws one polyline per method") {
  BenchConfig config = small_config();
  config.methods = {Method::Nlm, Method::Nlacm};
  config.variances = {0.02, 0.08};
  const std::string svg = render_svg(run_sweep(config));
  CHECK(svg.starts_with("<svg"));
  std::size_t polylines = 0;
  for (std::size_t at = svg.find("<polyline"); at != std::string::npos;
       at = svg.find("<polyline", at + 1)) {
    ++polylines;
  }
  CHECK(polylines == 2);
}
