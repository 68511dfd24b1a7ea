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

#include "vsaforge/serialize.hpp"

#include <array>
#include <fstream>
#include <istream>
#include <ostream>

#include "vsaforge/errors.hpp"

namespace vsaforge {

std::vector<std::uint8_t> pack_bits(std::span<const Word> words, std::size_t nbits) {
  std::vector<std::uint8_t> out((nbits + 7) / 8, 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    const std::size_t bit_off = i * 8;
    const Word w = words[bit_off / kWordBits] >> (bit_off % kWordBits);
    out[i] = static_cast<std::uint8_t>(w & 0xFF);
  }
  // zero any padding bits beyond nbits in the final byte
  if (nbits % 8 != 0)
    out.back() &= static_cast<std::uint8_t>((1u << (nbits % 8)) - 1);
  return out;
}

void unpack_bits(std::span<const std::uint8_t> bytes, std::span<Word> words,
                 std::size_t nbits) {
  for (auto& w : words) w = 0;
  for (std::size_t i = 0; i < bytes.size(); ++i) {
    const std::size_t bit_off = i * 8;
    if (bit_off >= nbits) break;
    words[bit_off / kWordBits] |= Word{bytes[i]} << (bit_off % kWordBits);
  }
  mask_tail(words, nbits);
}

namespace {

void put_u16(std::ostream& os, std::uint16_t v) {
  const std::array<char, 2> b{static_cast<char>(v & 0xFF), static_cast<char>(v >> 8)};
  os.write(b.data(), b.size());
}

void put_u32(std::ostream& os, std::uint32_t v) {
  std::array<char, 4> b{};
  for (int i = 0; i < 4; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xFF);
  os.write(b.data(), b.size());
}

std::uint16_t get_u16(std::istream& is) {
  std::array<unsigned char, 2> b{};
  is.read(reinterpret_cast<char*>(b.data()), b.size());
  return static_cast<std::uint16_t>(b[0] | (b[1] << 8));
}

std::uint32_t get_u32(std::istream& is) {
  std::array<unsigned char, 4> b{};
  is.read(reinterpret_cast<char*>(b.data()), b.size());
  std::uint32_t v = 0;
  for (int i = 0; i < 4; ++i) v |= std::uint32_t{b[i]} << (8 * i);
  return v;
}

}  // namespace

void write_hvec(std::ostream& os, const Hypervector& v) {
  os.write("HVEC", 4);
  put_u16(os, kHvecVersion);
  put_u32(os, v.dim());
  put_u32(os, v.fold_width());
  put_u16(os, 0);
  const auto bytes = pack_bits(v.words(), v.dim());
  os.write(reinterpret_cast<const char*>(bytes.data()),
           static_cast<std::streamsize>(bytes.size()));
  if (!os) throw IoError("hvec write failed");
}

Hypervector read_hvec(std::istream& is) {
  char magic[4];
  is.read(magic, 4);
  if (!is || std::string(magic, 4) != "HVEC") throw IoError("bad HVEC magic");
  const auto version = get_u16(is);
  if (version != kHvecVersion) throw IoError("unsupported HVEC version");
  const auto dim = get_u32(is);
  const auto w = get_u32(is);
  if (get_u16(is) != 0) throw IoError("nonzero reserved header bytes");
  if (w == 0 || dim == 0 || dim % w != 0) throw IoError("invalid HVEC dimensions");
  std::vector<std::uint8_t> bytes((dim + 7) / 8);
  is.read(reinterpret_cast<char*>(bytes.data()),
          static_cast<std::streamsize>(bytes.size()));
  if (!is) throw IoError("truncated HVEC payload");
  Hypervector out(dim, w);
  unpack_bits(bytes, out.words(), dim);
  return out;
}

void write_hvec_file(const std::string& path, const Hypervector& v) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw IoError("cannot open for write: " + path);
  write_hvec(os, v);
}

Hypervector read_hvec_file(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw IoError("cannot open: " + path);
  return read_hvec(is);
}

}  // namespace vsaforge
