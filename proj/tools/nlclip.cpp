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

// Command-line harness around the nlclip library: single-image denoising,
// speckle corruption, synthetic test images, PSNR sweeps and edge profiles.

#include "nlclip/bench.hpp"
#include "nlclip/filter.hpp"
#include "nlclip/metrics.hpp"
#include "nlclip/noise.hpp"
#include "nlclip/pgm.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#ifdef _WIN32
#include <io.h>
#define NLCLIP_ISATTY(fd) _isatty(fd)
#else
#include <unistd.h>
#define NLCLIP_ISATTY(fd) isatty(fd)
#endif

namespace {

using namespace nlclip;

bool stderr_color() {
  return NLCLIP_ISATTY(2) != 0 && std::getenv("NO_COLOR") == nullptr;
}

void print_error(const std::string& message) {
  if (stderr_color()) {
    std::cerr << "\033[31merror:\033[0m " << message << "\n";
  } else {
    std::cerr << "error: " << message << "\n";
  }
}

void print_warning(const std::string& message) {
  if (stderr_color()) {
    std::cerr << "\033[33mwarning:\033[0m " << message << "\n";
  } else {
    std::cerr << "warning: " << message << "\n";
  }
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> parts;
  std::string current;
  for (const char c : text) {
    if (c == ',') {
      if (!current.empty()) parts.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  if (!current.empty()) parts.push_back(current);
  return parts;
}

std::vector<Method> parse_methods(const std::string& list) {
  std::vector<Method> methods;
  for (const std::string& name : split_list(list)) {
    const auto method = parse_method(name);
    if (!method) {
      throw CLI::ValidationError("--methods",
                                 "unknown method '" + name + "' (want nlm, nlscem, nlacm)");
    }
    methods.push_back(*method);
  }
  if (methods.empty()) throw CLI::ValidationError("--methods", "empty method list");
  return methods;
}

std::vector<double> parse_variances(const std::string& list) {
  std::vector<double> variances;
  for (const std::string& item : split_list(list)) {
    try {
      const double v = std::stod(item);
      if (!(v > 0.0)) throw CLI::ValidationError("--variances", "variance must be positive");
      variances.push_back(v);
    } catch (const CLI::ValidationError&) {
      throw;
    } catch (const std::exception&) {
      throw CLI::ValidationError("--variances", "bad number '" + item + "'");
    }
  }
  if (variances.empty()) throw CLI::ValidationError("--variances", "empty variance list");
  return variances;
}

std::vector<std::uint64_t> parse_seeds(const std::string& list) {
  std::vector<std::uint64_t> seeds;
  for (const std::string& item : split_list(list)) {
    try {
      seeds.push_back(std::stoull(item));
    } catch (const std::exception&) {
      throw CLI::ValidationError("--seeds", "bad seed '" + item + "'");
    }
  }
  if (seeds.empty()) throw CLI::ValidationError("--seeds", "empty seed list");
  return seeds;
}

NoiseKind parse_noise_kind(const std::string& name) {
  if (name == "uniform") return NoiseKind::Uniform;
  if (name == "gaussian") return NoiseKind::Gaussian;
  throw CLI::ValidationError("--dist", "unknown distribution '" + name + "'");
}

struct SourceOptions {
  std::string image = "checker";
  Index size = 0;  // 0 keeps the generator default
  Index square = 32;
  double low = 0.0;
  double high = 1.0;
};

// "checker" and "edge" are generated; anything else is read as a PGM path.
Image resolve_image(const SourceOptions& source, std::string& image_id) {
  if (source.image == "checker") {
    image_id = "checker";
    const Index size = source.size > 0 ? source.size : 256;
    return generate_checker(size, size, source.square, source.low, source.high);
  }
  if (source.image == "edge") {
    image_id = "edge";
    const Index size = source.size > 0 ? source.size : 64;
    return generate_step_edge(size, size, source.low, source.high);
  }
  image_id = std::filesystem::path(source.image).stem().string();
  if (image_id.empty()) image_id = source.image;
  return read_pgm_file(source.image);
}

void add_source_options(CLI::App* cmd, SourceOptions& source) {
  cmd->add_option("--image", source.image,
                  "clean image: 'checker', 'edge', or a PGM path");
  cmd->add_option("--size", source.size, "generated image side length");
  cmd->add_option("--square", source.square, "checker tile side");
  cmd->add_option("--low", source.low, "generator low amplitude");
  cmd->add_option("--high", source.high, "generator high amplitude");
}

double resolve_h(const std::optional<double>& explicit_h,
                 const std::optional<double>& auto_h_variance) {
  if (explicit_h && auto_h_variance) {
    print_warning("--h overrides --auto-h");
    return *explicit_h;
  }
  if (explicit_h) return *explicit_h;
  if (auto_h_variance) return default_h(*auto_h_variance);
  throw CLI::RequiredError("--h or --auto-h");
}

void write_text(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::fwrite(text.data(), 1, text.size(), stdout);
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << text;
  if (!out) throw std::runtime_error("write failed: " + path);
}

int run(int argc, char** argv) {
  CLI::App app{"Grayscale denoising with non-local means and sigma-clipped variants"};
  app.require_subcommand(1);
  // --h is a filter parameter, so help lives on --help alone.
  app.set_help_flag("--help", "print help and exit");

  auto add_subcommand = [&app](const std::string& name, const std::string& description) {
    CLI::App* cmd = app.add_subcommand(name, description);
    cmd->set_help_flag("--help", "print help and exit");
    return cmd;
  };

  // denoise
  auto* denoise_cmd = add_subcommand("denoise", "denoise a PGM image");
  std::string denoise_input;
  std::string denoise_method = "nlm";
  std::string denoise_out;
  int d_search = 10;
  int d_patch = 3;
  std::optional<double> d_h;
  std::optional<double> d_auto_h;
  int d_threads = 0;
  denoise_cmd->add_option("input", denoise_input, "input PGM")->required();
  denoise_cmd->add_option("--method", denoise_method, "nlm, nlscem or nlacm");
  denoise_cmd->add_option("--s", d_search, "search-window size");
  denoise_cmd->add_option("--r", d_patch, "patch side (odd)");
  denoise_cmd->add_option("--h", d_h, "smoothing parameter");
  denoise_cmd->add_option("--auto-h", d_auto_h, "derive h from this noise variance");
  denoise_cmd->add_option("--threads", d_threads, "worker threads (0 = all cores)");
  denoise_cmd->add_option("--out", denoise_out, "output PGM")->required();

  // noise
  auto* noise_cmd = add_subcommand("noise", "inject speckle noise into a PGM image");
  std::string noise_input;
  std::string noise_out;
  double noise_variance = 0.0;
  std::uint64_t noise_seed = 1;
  std::string noise_dist = "uniform";
  noise_cmd->add_option("input", noise_input, "input PGM")->required();
  noise_cmd->add_option("--variance", noise_variance, "noise variance")->required();
  noise_cmd->add_option("--seed", noise_seed, "RNG seed");
  noise_cmd->add_option("--dist", noise_dist, "uniform or gaussian");
  noise_cmd->add_option("--out", noise_out, "output PGM")->required();

  // bench
  auto* bench_cmd = add_subcommand("bench", "PSNR sweep over variances, seeds and methods");
  SourceOptions bench_source;
  add_source_options(bench_cmd, bench_source);
  std::string bench_variances;
  std::string bench_seeds;
  std::string bench_methods;
  int b_search = 10;
  int b_patch = 3;
  std::optional<double> b_h;
  int b_threads = 0;
  bool b_timing = false;
  bool b_clamp_noise = false;
  std::string bench_out;
  std::string bench_svg;
  std::string bench_dist = "uniform";
  bench_cmd->add_option("--variances", bench_variances, "comma list (default 0.01..0.10)");
  bench_cmd->add_option("--seeds", bench_seeds, "comma list (default 1,2,3,4,5)");
  bench_cmd->add_option("--methods", bench_methods, "comma list (default nlm,nlscem,nlacm)");
  bench_cmd->add_option("--s", b_search, "search-window size");
  bench_cmd->add_option("--r", b_patch, "patch side (odd)");
  bench_cmd->add_option("--h", b_h, "fixed smoothing parameter (default: derived per variance)");
  bench_cmd->add_option("--threads", b_threads, "worker threads (0 = all cores)");
  bench_cmd->add_option("--dist", bench_dist, "noise distribution: uniform or gaussian");
  bench_cmd->add_flag("--clamp-noise", b_clamp_noise,
                      "clamp corrupted amplitudes into [0,1] before denoising");
  bench_cmd->add_flag("--timing", b_timing,
                      "measure wall time (makes CSV bytes run-dependent)");
  bench_cmd->add_option("--out", bench_out, "CSV file (default: stdout)");
  bench_cmd->add_option("--svg", bench_svg, "also write a PSNR-vs-variance SVG chart");

  // checker
  auto* checker_cmd = add_subcommand("checker", "emit a checkerboard PGM");
  Index checker_size = 256;
  Index checker_square = 32;
  double checker_low = 0.0;
  double checker_high = 1.0;
  std::string checker_out;
  checker_cmd->add_option("--size", checker_size, "image side length");
  checker_cmd->add_option("--square", checker_square, "tile side");
  checker_cmd->add_option("--low", checker_low, "dark amplitude");
  checker_cmd->add_option("--high", checker_high, "bright amplitude");
  checker_cmd->add_option("--out", checker_out, "output PGM")->required();

  // edge
  auto* edge_cmd = add_subcommand("edge", "emit a vertical step-edge PGM");
  Index edge_width = 64;
  Index edge_height = 64;
  double edge_low = 0.0;
  double edge_high = 1.0;
  std::string edge_out;
  edge_cmd->add_option("--width", edge_width, "image width");
  edge_cmd->add_option("--height", edge_height, "image height");
  edge_cmd->add_option("--low", edge_low, "left amplitude");
  edge_cmd->add_option("--high", edge_high, "right amplitude");
  edge_cmd->add_option("--out", edge_out, "output PGM")->required();

  // profile
  auto* profile_cmd = add_subcommand(
      "profile", "scanline CSV: position, clean, noisy and one column per method");
  SourceOptions profile_source;
  profile_source.image = "edge";
  add_source_options(profile_cmd, profile_source);
  double profile_variance = 0.0;
  std::uint64_t profile_seed = 1;
  Index profile_row = -1;
  std::string profile_methods;
  int p_search = 10;
  int p_patch = 3;
  std::optional<double> p_h;
  int p_threads = 0;
  bool p_clamp_noise = false;
  std::string profile_out;
  profile_cmd->add_option("--variance", profile_variance, "noise variance")->required();
  profile_cmd->add_option("--seed", profile_seed, "RNG seed");
  profile_cmd->add_flag("--clamp-noise", p_clamp_noise,
                        "clamp corrupted amplitudes into [0,1] before denoising");
  profile_cmd->add_option("--row", profile_row, "scanline row (default: middle)");
  profile_cmd->add_option("--methods", profile_methods, "comma list (default nlm,nlscem,nlacm)");
  profile_cmd->add_option("--s", p_search, "search-window size");
  profile_cmd->add_option("--r", p_patch, "patch side (odd)");
  profile_cmd->add_option("--h", p_h, "smoothing parameter (default: derived from variance)");
  profile_cmd->add_option("--threads", p_threads, "worker threads (0 = all cores)");
  profile_cmd->add_option("--out", profile_out, "CSV file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);  // prints help text or the usage error
    return code == 0 ? 0 : 1;
  }

  if (denoise_cmd->parsed()) {
    FilterParams params;
    params.search = d_search;
    params.patch = d_patch;
    params.smoothing = resolve_h(d_h, d_auto_h);
    const auto method = parse_method(denoise_method);
    if (!method) {
      throw CLI::ValidationError("--method", "unknown method '" + denoise_method + "'");
    }
    params.anchor = method_anchor(*method);
    const Image input = read_pgm_file(denoise_input);
    write_pgm_file(denoise(input, params, d_threads), denoise_out);
    return 0;
  }

  if (noise_cmd->parsed()) {
    const Image input = read_pgm_file(noise_input);
    const NoiseSpec spec{noise_variance, noise_seed, parse_noise_kind(noise_dist)};
    write_pgm_file(add_speckle(input, spec), noise_out);
    return 0;
  }

  if (bench_cmd->parsed()) {
    BenchConfig config;
    config.image = resolve_image(bench_source, config.image_id);
    if (!bench_variances.empty()) config.variances = parse_variances(bench_variances);
    if (!bench_seeds.empty()) config.seeds = parse_seeds(bench_seeds);
    if (!bench_methods.empty()) config.methods = parse_methods(bench_methods);
    config.search = b_search;
    config.patch = b_patch;
    config.fixed_h = b_h;
    config.noise_kind = parse_noise_kind(bench_dist);
    config.clamp_noise = b_clamp_noise;
    config.measure_time = b_timing;
    config.threads = b_threads;
    const std::vector<BenchRecord> records = run_sweep(config);
    write_text(to_csv(records), bench_out);
    if (!bench_svg.empty()) write_text(render_svg(records), bench_svg);
    return 0;
  }

  if (checker_cmd->parsed()) {
    write_pgm_file(generate_checker(checker_size, checker_size, checker_square,
                                    checker_low, checker_high),
                   checker_out);
    return 0;
  }

  if (edge_cmd->parsed()) {
    write_pgm_file(generate_step_edge(edge_width, edge_height, edge_low, edge_high),
                   edge_out);
    return 0;
  }

  if (profile_cmd->parsed()) {
    std::string image_id;
    const Image clean = resolve_image(profile_source, image_id);
    const Index row = profile_row >= 0 ? profile_row : clean.rows() / 2;
    const std::vector<Method> methods = profile_methods.empty()
                                            ? std::vector<Method>{Method::Nlm, Method::Nlscem,
                                                                  Method::Nlacm}
                                            : parse_methods(profile_methods);
    const Image noisy = add_speckle(
        clean, NoiseSpec{profile_variance, profile_seed, NoiseKind::Uniform, p_clamp_noise});
    const double h = p_h ? *p_h : default_h(profile_variance);

    std::string csv = "position,clean,noisy";
    std::vector<EdgeProfile> profiles;
    for (const Method method : methods) {
      csv += ',';
      csv += method_name(method);
      FilterParams params;
      params.search = p_search;
      params.patch = p_patch;
      params.smoothing = h;
      params.anchor = method_anchor(method);
      profiles.push_back(extract_profile(denoise(noisy, params, p_threads), row));
    }
    csv += '\n';
    const EdgeProfile clean_profile = extract_profile(clean, row);
    const EdgeProfile noisy_profile = extract_profile(noisy, row);
    for (Index col = 0; col < clean.cols(); ++col) {
      csv += std::to_string(col);
      csv += ',';
      csv += format_g6(clean_profile.amplitudes(col));
      csv += ',';
      csv += format_g6(noisy_profile.amplitudes(col));
      for (const EdgeProfile& profile : profiles) {
        csv += ',';
        csv += format_g6(profile.amplitudes(col));
      }
      csv += '\n';
    }
    write_text(csv, profile_out);
    return 0;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const CLI::ParseError& e) {
    // ValidationError raised after parsing (bad list entries and the like)
    if (e.get_exit_code() == 0) return 0;
    print_error(e.what());
    return 1;
  } catch (const nlclip::PgmError& e) {
    print_error(e.what());
    return 2;
  } catch (const std::invalid_argument& e) {
    print_error(e.what());
    return 1;
  } catch (const std::exception& e) {
    print_error(e.what());
    return 2;
  }
}
