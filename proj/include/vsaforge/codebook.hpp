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

/// One rule-90 update with cyclic boundary: out[i] = f[i-1] XOR f[i+1]
/// (indices mod W), i.e. rotate-left-1 XOR rotate-right-1.
Fold ca90_step(const Fold& f);

/// n applications of ca90_step.
Fold ca90_pow(Fold f, std::uint32_t n);

/// fold_0 = seed, fold_k = ca90_step(fold_{k-1}); one step per fold index.
std::vector<Fold> expand(const Fold& seed, std::uint32_t num_folds);

/// Compressed symbol store: one W-bit seed per item, full vectors regenerated
/// on demand. Immutable after construction. The all-zero seed is a rule-90
/// fixed point, so the constructor rejects it.
class Codebook {
 public:
  Codebook(std::string name, std::uint32_t dim, std::uint32_t fold_width,
           std::vector<Fold> seeds);

  const std::string& name() const { return name_; }
  std::uint32_t size() const { return static_cast<std::uint32_t>(seeds_.size()); }
  std::uint32_t dim() const { return dim_; }
  std::uint32_t fold_width() const { return fold_width_; }
  std::uint32_t num_folds() const { return dim_ / fold_width_; }
  const std::vector<Fold>& seeds() const { return seeds_; }
  const Fold& seed(std::uint32_t i) const;

  /// Full hypervector for item i, assembled from the CA-90 expansion of its
  /// seed. Pure: identical calls give identical vectors.
  Hypervector item(std::uint32_t i) const;

  /// Stored bytes: N*W/8 when compressed (seeds only), N*D/8 when not.
  std::uint64_t footprint(bool compressed) const;

  static Codebook random(std::string name, std::uint32_t num_items, std::uint32_t dim,
                         std::uint32_t fold_width, std::uint64_t seed);

 private:
  std::string name_;
  std::uint32_t dim_;
  std::uint32_t fold_width_;
  std::vector<Fold> seeds_;
};

// Codebook file format ("CBNK"), little-endian:
//   bytes 0-3  magic "CBNK"
//   bytes 4-5  version (u16) = 1
//   bytes 6-9  N (u32), 10-13 D (u32), 14-17 W (u32)
// followed by N seed folds, each packed to ceil(W/8) bytes (LSB-first).
inline constexpr std::uint16_t kCbnkVersion = 1;

void write_codebook(std::ostream& os, const Codebook& cb);
Codebook read_codebook(std::istream& is, std::string name);
void write_codebook_file(const std::string& path, const Codebook& cb);
Codebook read_codebook_file(const std::string& path, std::string name = "");

}  // namespace vsaforge
