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
#include <span>
#include <vector>

#include "vsaforge/bits.hpp"

namespace vsaforge {

/// Saturates v to the two's-complement range of `bits` bits.
constexpr std::int64_t saturate(std::int64_t v, int bits) {
  const std::int64_t hi = (std::int64_t{1} << (bits - 1)) - 1;
  const std::int64_t lo = -(std::int64_t{1} << (bits - 1));
  return v > hi ? hi : (v < lo ? lo : v);
}

/// Bit-width pair for the integer datapaths: H for bundling lanes, C for
/// distance scores. wide() disables saturation effects for pure algebra.
struct Precision {
  int h_bits = 8;
  int c_bits = 12;
  static constexpr Precision wide() { return Precision{32, 32}; }
};

/// Arithmetic right shift applied when a C-bit distance feeds the H-bit
/// scalar multiplier. One bit of headroom is left for the clamp so locked-on
/// similarities still dominate without erasing small correlations.
constexpr int multiplier_shift(int c_bits, int h_bits) {
  return c_bits > h_bits + 1 ? c_bits - h_bits - 1 : 0;
}

/// One W-bit block of a hypervector. Bits are packed LSB-first into 64-bit
/// words; any bits beyond `width` in the last word stay zero.
class Fold {
 public:
  Fold() = default;
  explicit Fold(std::uint32_t width)
      : width_(width), words_(words_for_bits(width), 0) {}

  std::uint32_t width() const { return width_; }
  std::span<const Word> words() const { return words_; }
  std::span<Word> words() { return words_; }

  bool bit(std::size_t i) const { return get_bit(words_, i); }
  void set_bit(std::size_t i, bool v) { vsaforge::set_bit(std::span<Word>(words_), i, v); }

  bool is_zero() const {
    for (Word w : words_)
      if (w != 0) return false;
    return true;
  }

  std::size_t popcount() const { return popcount_bits(words_, width_); }

  /// Cyclic rotation within the fold: result bit i = bit (i+1) mod W.
  Fold rotl1() const;
  /// Cyclic rotation within the fold: result bit i = bit (i-1) mod W.
  Fold rotr1() const;

  /// Logical shift toward lower bit indices; vacated high bits are zero.
  Fold shift_down(std::uint32_t n) const;
  /// Logical shift toward higher bit indices; vacated low bits are zero.
  Fold shift_up(std::uint32_t n) const;

  Fold operator^(const Fold& o) const;

  friend bool operator==(const Fold&, const Fold&) = default;

  static Fold random(std::uint32_t width, std::uint64_t seed);

 private:
  std::uint32_t width_ = 0;
  std::vector<Word> words_;
};

/// D-dimensional binary hypervector with bipolar semantics: bit 0 maps to +1
/// and bit 1 to -1. Stored as one flat LSB-first bit array; fold k occupies
/// bit range [k*W, (k+1)*W). Immutable by convention: operations return new
/// values.
class Hypervector {
 public:
  Hypervector() = default;
  /// All-zero vector (bipolar all-ones). Throws ConfigError unless W divides D.
  Hypervector(std::uint32_t dim, std::uint32_t fold_width);

  std::uint32_t dim() const { return dim_; }
  std::uint32_t fold_width() const { return fold_width_; }
  std::uint32_t num_folds() const { return fold_width_ ? dim_ / fold_width_ : 0; }

  std::span<const Word> words() const { return words_; }
  std::span<Word> words() { return words_; }

  bool bit(std::size_t i) const { return get_bit(words_, i); }
  void set_bit(std::size_t i, bool v) { vsaforge::set_bit(std::span<Word>(words_), i, v); }

  Fold fold(std::uint32_t k) const;
  static Hypervector from_folds(std::span<const Fold> folds, std::uint32_t fold_width);

  friend bool operator==(const Hypervector&, const Hypervector&) = default;

 private:
  std::uint32_t dim_ = 0;
  std::uint32_t fold_width_ = 0;
  std::vector<Word> words_;
};

/// Integer-domain intermediate for bundling and scalar multiplication: one
/// signed lane per dimension, every update saturating at h_bits.
class Accumulator {
 public:
  Accumulator() = default;
  Accumulator(std::uint32_t dim, std::uint32_t fold_width, int h_bits);

  std::uint32_t dim() const { return dim_; }
  std::uint32_t fold_width() const { return fold_width_; }
  int h_bits() const { return h_bits_; }

  std::int32_t lane(std::size_t i) const { return lanes_[i]; }
  std::span<const std::int32_t> lanes() const { return lanes_; }

  /// lane += delta, saturating at h_bits.
  void add_to_lane(std::size_t i, std::int64_t delta) {
    lanes_[i] = static_cast<std::int32_t>(
        saturate(static_cast<std::int64_t>(lanes_[i]) + delta, h_bits_));
  }

  friend bool operator==(const Accumulator&, const Accumulator&) = default;

 private:
  std::uint32_t dim_ = 0;
  std::uint32_t fold_width_ = 0;
  int h_bits_ = 8;
  std::vector<std::int32_t> lanes_;
};

/// Signed similarity value saturating at `bits` bits.
struct SimilarityScore {
  std::int64_t value = 0;
  int bits = 32;

  friend bool operator==(const SimilarityScore&, const SimilarityScore&) = default;
};

}  // namespace vsaforge
