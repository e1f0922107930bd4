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

#include "nlclip/pgm.hpp"

#include <cmath>
#include <fstream>
#include <limits>

namespace nlclip {

namespace {

constexpr Index kMaxDimension = 1 << 20;

bool is_pgm_space(std::uint8_t c) {
  return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\v' || c == '\f';
}

class Cursor {
 public:
  explicit Cursor(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

  std::size_t offset() const { return pos_; }
  bool done() const { return pos_ >= bytes_.size(); }

  std::uint8_t next() {
    if (done()) throw PgmError(pos_, "unexpected end of data");
    return bytes_[pos_++];
  }

  // Whitespace and '#' comments between header tokens.
  void skip_separators() {
    while (!done()) {
      const std::uint8_t c = bytes_[pos_];
      if (is_pgm_space(c)) {
        ++pos_;
      } else if (c == '#') {
        while (!done() && bytes_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  long parse_number(const char* field) {
    skip_separators();
    if (done()) throw PgmError(pos_, std::string("missing ") + field);
    if (bytes_[pos_] < '0' || bytes_[pos_] > '9') {
      throw PgmError(pos_, std::string("expected digit in ") + field);
    }
    long value = 0;
    while (!done() && bytes_[pos_] >= '0' && bytes_[pos_] <= '9') {
      value = value * 10 + (bytes_[pos_] - '0');
      if (value > std::numeric_limits<int>::max()) {
        throw PgmError(pos_, std::string(field) + " out of range");
      }
      ++pos_;
    }
    return value;
  }

 private:
  std::span<const std::uint8_t> bytes_;
  std::size_t pos_ = 0;
};

}  // namespace

Image read_pgm(std::span<const std::uint8_t> bytes) {
  Cursor cursor(bytes);
  if (bytes.size() < 2) throw PgmError(0, "not a PGM file");
  const std::uint8_t m0 = cursor.next();
  const std::uint8_t m1 = cursor.next();
  if (m0 != 'P' || (m1 != '2' && m1 != '5')) {
    throw PgmError(0, "bad magic, expected P2 or P5");
  }
  const bool binary = m1 == '5';

  const long width = cursor.parse_number("width");
  const long height = cursor.parse_number("height");
  const long maxval = cursor.parse_number("maxval");
  if (width < 1 || width > kMaxDimension) throw PgmError(cursor.offset(), "bad width");
  if (height < 1 || height > kMaxDimension) throw PgmError(cursor.offset(), "bad height");
  if (maxval < 1 || maxval > 65535) {
    throw PgmError(cursor.offset(), "maxval must be in [1, 65535]");
  }

  Image img(height, width);
  const double scale = 1.0 / static_cast<double>(maxval);

  if (binary) {
    // Exactly one whitespace byte separates maxval from the payload.
    const std::size_t sep = cursor.offset();
    if (!is_pgm_space(cursor.next())) {
      throw PgmError(sep, "expected single whitespace before raster");
    }
    const bool wide = maxval > 255;
    for (Index row = 0; row < img.rows(); ++row) {
      for (Index col = 0; col < img.cols(); ++col) {
        const std::size_t at = cursor.offset();
        long sample = cursor.next();
        if (wide) sample = (sample << 8) | cursor.next();
        if (sample > maxval) throw PgmError(at, "sample exceeds maxval");
        img(row, col) = static_cast<double>(sample) * scale;
      }
    }
  } else {
    for (Index row = 0; row < img.rows(); ++row) {
      for (Index col = 0; col < img.cols(); ++col) {
        const long sample = cursor.parse_number("sample");
        if (sample > maxval) throw PgmError(cursor.offset(), "sample exceeds maxval");
        img(row, col) = static_cast<double>(sample) * scale;
      }
    }
  }
  return img;
}

std::vector<std::uint8_t> write_pgm(const Image& img) {
  detail::require(img.rows() >= 1 && img.cols() >= 1, "write_pgm: empty image");
  detail::require(is_normalized(img), "write_pgm: amplitudes must lie in [0, 1]");
  std::string header = "P5\n" + std::to_string(img.cols()) + " " +
                       std::to_string(img.rows()) + "\n255\n";
  std::vector<std::uint8_t> bytes(header.begin(), header.end());
  bytes.reserve(bytes.size() + static_cast<std::size_t>(img.size()));
  for (Index row = 0; row < img.rows(); ++row) {
    for (Index col = 0; col < img.cols(); ++col) {
      bytes.push_back(static_cast<std::uint8_t>(std::lround(img(row, col) * 255.0)));
    }
  }
  return bytes;
}

Image read_pgm_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  if (in.bad()) throw std::runtime_error("read failed: " + path);
  return read_pgm(bytes);
}

void write_pgm_file(const Image& img, const std::string& path) {
  const std::vector<std::uint8_t> bytes = write_pgm(img);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace nlclip
