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

// End-to-end checks of the command-line surface: subcommand grammar, file
// formats and exit codes. Each test drives the real binary.

#include "nlclip/pgm.hpp"

#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#ifndef _WIN32
#include <sys/wait.h>
#endif

namespace fs = std::filesystem;

namespace {

const std::string kCli = NLCLIP_CLI_PATH;

struct RunResult {
  int exit_code = -1;
  std::string stdout_text;
};

fs::path temp_dir() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / "nlclip_cli_test";
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

RunResult run_cli(const std::string& args) {
  const fs::path out_path = temp_dir() / "stdout.txt";
  const std::string command =
      kCli + " " + args + " >" + out_path.string() + " 2>" + (temp_dir() / "stderr.txt").string();
  const int raw = std::system(command.c_str());
  RunResult result;
#ifdef _WIN32
  result.exit_code = raw;
#else
  result.exit_code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
#endif
  std::ifstream in(out_path, std::ios::binary);
  result.stdout_text.assign((std::istreambuf_iterator<char>(in)),
                            std::istreambuf_iterator<char>());
  return result;
}

std::vector<std::uint8_t> read_bytes(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::size_t count_lines(const std::string& text) {
  std::size_t lines = 0;
  for (const char c : text) {
    if (c == '\n') ++lines;
  }
  return lines;
}

}  // namespace

TEST_CASE("cli: checker emits a two-level PGM") {
  const fs::path out = temp_dir() / "checker.pgm";
  const RunResult result =
      run_cli("checker --size 16 --square 4 --out " + out.string());
  REQUIRE(result.exit_code == 0);
  const nlclip::Image img = nlclip::read_pgm_file(out.string());
  CHECK(img.rows() == 16);
  CHECK(img.cols() == 16);
  CHECK(((img == 0.0) || (img == 1.0)).all());
}

TEST_CASE("cli: denoising a flat image returns it unchanged") {
  const fs::path flat = temp_dir() / "flat.pgm";
  nlclip::write_pgm_file(nlclip::Image(nlclip::Image::Constant(24, 24, 0.5)), flat.string());
  const fs::path out = temp_dir() / "flat_out.pgm";
  const RunResult result = run_cli("denoise " + flat.string() +
                                   " --method nlacm --auto-h 0.05 --s 6 --out " + out.string());
  REQUIRE(result.exit_code == 0);
  CHECK(read_bytes(flat) == read_bytes(out));
}

TEST_CASE("cli: bench cardinality and determinism") {
  const std::string args =
      "bench --image checker --size 16 --square 4 --s 4 "
      "--variances 0.01,0.1 --seeds 1 --methods nlm,nlacm";
  const RunResult first = run_cli(args);
  REQUIRE(first.exit_code == 0);
  CHECK(count_lines(first.stdout_text) == 5);  // header + 4 data rows
  CHECK(first.stdout_text.starts_with("image,method,variance,seed,psnr_db,wall_ms\n"));
  const RunResult second = run_cli(args);
  CHECK(first.stdout_text == second.stdout_text);
}

TEST_CASE("cli: bench writes an svg chart on request") {
  const fs::path svg = temp_dir() / "chart.svg";
  const RunResult result = run_cli(
      "bench --image checker --size 16 --square 4 --s 4 --variances 0.02,0.06 "
      "--seeds 1 --methods nlm,nlacm --svg " + svg.string());
  REQUIRE(result.exit_code == 0);
  std::ifstream in(svg);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(text.starts_with("<svg"));
  CHECK(text.find("polyline") != std::string::npos);
}

TEST_CASE("cli: profile clean column reproduces the step edge") {
  const RunResult result = run_cli(
      "profile --image edge --size 16 --variance 0.08 --row 8 --s 4 --methods nlm,nlacm");
  REQUIRE(result.exit_code == 0);
  CHECK(result.stdout_text.starts_with("position,clean,noisy,nlm,nlacm\n"));
  std::size_t line_start = result.stdout_text.find('\n') + 1;
  for (int col = 0; col < 16; ++col) {
    const std::size_t line_end = result.stdout_text.find('\n', line_start);
    const std::string line = result.stdout_text.substr(line_start, line_end - line_start);
    const std::string expected_prefix = std::to_string(col) + "," + (col < 8 ? "0," : "1,");
    CHECK(line.substr(0, expected_prefix.size()) == expected_prefix);
    line_start = line_end + 1;
  }
}

TEST_CASE("cli: noise is reproducible per seed") {
  const fs::path input = temp_dir() / "noise_in.pgm";
  nlclip::write_pgm_file(nlclip::Image(nlclip::Image::Constant(12, 12, 0.6)), input.string());
  const fs::path out1 = temp_dir() / "noise1.pgm";
  const fs::path out2 = temp_dir() / "noise2.pgm";
  REQUIRE(run_cli("noise " + input.string() + " --variance 0.05 --seed 9 --out " +
                  out1.string()).exit_code == 0);
  REQUIRE(run_cli("noise " + input.string() + " --variance 0.05 --seed 9 --out " +
                  out2.string()).exit_code == 0);
  CHECK(read_bytes(out1) == read_bytes(out2));
}

TEST_CASE("cli: exit codes distinguish usage from I/O errors") {
  CHECK(run_cli("frobnicate").exit_code == 1);                      // unknown subcommand
  CHECK(run_cli("bench --variances nope").exit_code == 1);          // bad list entry
  CHECK(run_cli("denoise missing.pgm --method nlm --out x.pgm").exit_code == 1);  // missing h
  CHECK(run_cli("denoise missing.pgm --method nlm --h 0.3 --out x.pgm").exit_code == 2);

  const fs::path bad = temp_dir() / "bad.pgm";
  std::ofstream(bad.string(), std::ios::binary) << "P9 not a pgm";
  CHECK(run_cli("denoise " + bad.string() + " --method nlm --h 0.3 --out x.pgm").exit_code == 2);

  const fs::path flat = temp_dir() / "usage_flat.pgm";
  nlclip::write_pgm_file(nlclip::Image(nlclip::Image::Constant(4, 4, 0.5)), flat.string());
  CHECK(run_cli("denoise " + flat.string() + " --method nlm --h 0.3 --r 4 --out " +
                (temp_dir() / "x.pgm").string()).exit_code == 1);  // even patch side
  CHECK(run_cli("--help").exit_code == 0);
}
