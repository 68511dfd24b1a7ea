/*
 * Copyright 2026 The vsa-forge Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "vsaforge/types.hpp"

namespace vsaforge {

// Hypervector file format ("HVEC"): a 16-byte header followed by the packed
// bits. Header layout, little-endian:
//   bytes 0-3   magic "HVEC"
//   bytes 4-5   version (u16) = 1
//   bytes 6-9   D (u32)
//   bytes 10-13 W (u32)
//   bytes 14-15 reserved, zero
// Payload: ceil(D/8) bytes; bit i of the vector is bit (i%8) of byte (i/8),
// i.e. little-endian packed bits in fold-major order (folds are contiguous).

inline constexpr std::uint16_t kHvecVersion = 1;

std::vector<std::uint8_t> pack_bits(std::span<const Word> words, std::size_t nbits);
void unpack_bits(std::span<const std::uint8_t> bytes, std::span<Word> words,
                 std::size_t nbits);

void write_hvec(std::ostream& os, const Hypervector& v);
Hypervector read_hvec(std::istream& is);

void write_hvec_file(const std::string& path, const Hypervector& v);
Hypervector read_hvec_file(const std::string& path);

}  // namespace vsaforge
