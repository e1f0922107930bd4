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

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace nlclip {

/// Malformed PGM input; `offset` is the byte position the parser stopped at.
class PgmError : public std::runtime_error {
 public:
  PgmError(std::size_t offset, const std::string& what)
      : std::runtime_error("pgm: byte " + std::to_string(offset) + ": " + what),
        offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// Parse a binary (P5) or ASCII (P2) PGM buffer. Samples are normalized to
/// amplitudes by dividing by maxval; maxval up to 65535 (two-byte P5 samples
/// are big-endian).
Image read_pgm(std::span<const std::uint8_t> bytes);

/// Serialize as binary P5 with maxval 255. Amplitude a maps to
/// round(a * 255), ties away from zero.
std::vector<std::uint8_t> write_pgm(const Image& img);

Image read_pgm_file(const std::string& path);
void write_pgm_file(const Image& img, const std::string& path);

}  // namespace nlclip
