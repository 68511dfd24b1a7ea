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

#include "vsaforge/codebook.hpp"

#include <fstream>
#include <istream>
#include <ostream>

#include "vsaforge/errors.hpp"
#include "vsaforge/rng.hpp"
#include "vsaforge/serialize.hpp"

namespace vsaforge {

Fold ca90_step(const Fold& f) { return f.rotl1() ^ f.rotr1(); }

Fold ca90_pow(Fold f, std::uint32_t n) {
  for (std::uint32_t i = 0; i < n; ++i) f = ca90_step(f);
  return f;
}

std::vector<Fold> expand(const Fold& seed, std::uint32_t num_folds) {
  if (num_folds < 1) throw ConfigError("expand: num_folds must be >= 1");
  std::vector<Fold> out;
  out.reserve(num_folds);
  out.push_back(seed);
  for (std::uint32_t k = 1; k < num_folds; ++k) out.push_back(ca90_step(out.back()));
  return out;
}

Codebook::Codebook(std::string name, std::uint32_t dim, std::uint32_t fold_width,
                   std::vector<Fold> seeds)
    : name_(std::move(name)), dim_(dim), fold_width_(fold_width), seeds_(std::move(seeds)) {
  if (fold_width == 0 || dim == 0 || dim % fold_width != 0)
    throw ConfigError("codebook: dim must be a positive multiple of fold_width");
  if (seeds_.empty()) throw ConfigError("codebook: no seeds");
  for (const auto& s : seeds_) {
    if (s.width() != fold_width) throw ConfigError("codebook: seed width mismatch");
    if (s.is_zero())
      throw ConfigError("codebook '" + name_ + "': all-zero seed is a CA-90 fixed point");
  }
}

const Fold& Codebook::seed(std::uint32_t i) const {
  if (i >= seeds_.size()) throw ConfigError("codebook: item index out of range");
  return seeds_[i];
}

Hypervector Codebook::item(std::uint32_t i) const {
  const auto folds = expand(seed(i), num_folds());
  return Hypervector::from_folds(folds, fold_width_);
}

std::uint64_t Codebook::footprint(bool compressed) const {
  const std::uint64_t per_item = compressed ? fold_width_ : dim_;
  return std::uint64_t{size()} * per_item / 8;
}

Codebook Codebook::random(std::string name, std::uint32_t num_items, std::uint32_t dim,
                          std::uint32_t fold_width, std::uint64_t seed) {
  std::vector<Fold> seeds;
  seeds.reserve(num_items);
  for (std::uint32_t i = 0; i < num_items; ++i) {
    std::uint64_t salt = 0;
    Fold f = Fold::random(fold_width, derive_seed(seed, i));
    while (f.is_zero())  // vanishingly unlikely; re-draw keeps the invariant
      f = Fold::random(fold_width, derive_seed(seed, i + (++salt << 32)));
    seeds.push_back(std::move(f));
  }
  return Codebook(std::move(name), dim, fold_width, std::move(seeds));
}

namespace {

void put_u16(std::ostream& os, std::uint16_t v) {
  char b[2] = {static_cast<char>(v & 0xFF), static_cast<char>(v >> 8)};
  os.write(b, 2);
}

void put_u32(std::ostream& os, std::uint32_t v) {
  char b[4];
  for (int i = 0; i < 4; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xFF);
  os.write(b, 4);
}

std::uint16_t get_u16(std::istream& is) {
  unsigned char b[2];
  is.read(reinterpret_cast<char*>(b), 2);
  return static_cast<std::uint16_t>(b[0] | (b[1] << 8));
}

std::uint32_t get_u32(std::istream& is) {
  unsigned char b[4];
  is.read(reinterpret_cast<char*>(b), 4);
  std::uint32_t v = 0;
  for (int i = 0; i < 4; ++i) v |= std::uint32_t{b[i]} << (8 * i);
  return v;
}

}  // namespace

void write_codebook(std::ostream& os, const Codebook& cb) {
  os.write("CBNK", 4);
  put_u16(os, kCbnkVersion);
  put_u32(os, cb.size());
  put_u32(os, cb.dim());
  put_u32(os, cb.fold_width());
  for (std::uint32_t i = 0; i < cb.size(); ++i) {
    const auto bytes = pack_bits(cb.seed(i).words(), cb.fold_width());
    os.write(reinterpret_cast<const char*>(bytes.data()),
             static_cast<std::streamsize>(bytes.size()));
  }
  if (!os) throw IoError("codebook write failed");
}

Codebook read_codebook(std::istream& is, std::string name) {
  char magic[4];
  is.read(magic, 4);
  if (!is || std::string(magic, 4) != "CBNK") throw IoError("bad CBNK magic");
  if (get_u16(is) != kCbnkVersion) throw IoError("unsupported CBNK version");
  const auto n = get_u32(is);
  const auto dim = get_u32(is);
  const auto w = get_u32(is);
  if (w == 0 || dim == 0 || dim % w != 0)
    throw IoError("CBNK: dim not divisible by fold width");
  std::vector<Fold> seeds;
  seeds.reserve(n);
  std::vector<std::uint8_t> bytes((w + 7) / 8);
  for (std::uint32_t i = 0; i < n; ++i) {
    is.read(reinterpret_cast<char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
    if (!is) throw IoError("truncated CBNK payload");
    Fold f(w);
    unpack_bits(bytes, f.words(), w);
    seeds.push_back(std::move(f));
  }
  return Codebook(std::move(name), dim, w, std::move(seeds));  // validates nonzero seeds
}

void write_codebook_file(const std::string& path, const Codebook& cb) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw IoError("cannot open for write: " + path);
  write_codebook(os, cb);
}

Codebook read_codebook_file(const std::string& path, std::string name) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw IoError("cannot open: " + path);
  return read_codebook(is, name.empty() ? path : std::move(name));
}

}  // namespace vsaforge
