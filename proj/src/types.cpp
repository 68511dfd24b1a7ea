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

#include "vsaforge/types.hpp"

#include "vsaforge/errors.hpp"
#include "vsaforge/rng.hpp"

namespace vsaforge {

Fold Fold::rotl1() const {
  Fold out = shift_down(1);
  out.set_bit(width_ - 1, bit(0));
  return out;
}

Fold Fold::rotr1() const {
  Fold out = shift_up(1);
  out.set_bit(0, bit(width_ - 1));
  return out;
}

Fold Fold::shift_down(std::uint32_t n) const {
  Fold out(width_);
  if (n >= width_) return out;
  copy_bits(words_, n, out.words(), 0, width_ - n);
  return out;
}

Fold Fold::shift_up(std::uint32_t n) const {
  Fold out(width_);
  if (n >= width_) return out;
  copy_bits(words_, 0, out.words(), n, width_ - n);
  return out;
}

Fold Fold::operator^(const Fold& o) const {
  if (width_ != o.width_) throw DimensionError("fold width mismatch in XOR");
  Fold out(width_);
  for (std::size_t i = 0; i < words_.size(); ++i)
    out.words_[i] = words_[i] ^ o.words_[i];
  return out;
}

Fold Fold::random(std::uint32_t width, std::uint64_t seed) {
  Fold out(width);
  for (std::size_t i = 0; i < out.words_.size(); ++i)
    out.words_[i] = stream_word(seed, i);
  mask_tail(out.words(), width);
  return out;
}

Hypervector::Hypervector(std::uint32_t dim, std::uint32_t fold_width)
    : dim_(dim), fold_width_(fold_width) {
  if (dim == 0 || fold_width == 0 || dim % fold_width != 0)
    throw ConfigError("dim must be a positive multiple of fold_width (got dim=" +
                      std::to_string(dim) + ", W=" + std::to_string(fold_width) + ")");
  words_.assign(words_for_bits(dim), 0);
}

Fold Hypervector::fold(std::uint32_t k) const {
  Fold out(fold_width_);
  copy_bits(words_, std::size_t{k} * fold_width_, out.words(), 0, fold_width_);
  return out;
}

Hypervector Hypervector::from_folds(std::span<const Fold> folds, std::uint32_t fold_width) {
  if (folds.empty()) throw ConfigError("from_folds: empty fold list");
  Hypervector out(static_cast<std::uint32_t>(folds.size()) * fold_width, fold_width);
  for (std::size_t k = 0; k < folds.size(); ++k) {
    if (folds[k].width() != fold_width)
      throw DimensionError("from_folds: fold width mismatch");
    copy_bits(folds[k].words(), 0, out.words(), k * fold_width, fold_width);
  }
  return out;
}

Accumulator::Accumulator(std::uint32_t dim, std::uint32_t fold_width, int h_bits)
    : dim_(dim), fold_width_(fold_width), h_bits_(h_bits), lanes_(dim, 0) {
  if (dim == 0 || fold_width == 0 || dim % fold_width != 0)
    throw ConfigError("accumulator dim must be a positive multiple of fold_width");
  if (h_bits < 2 || h_bits > 32) throw ConfigError("h_bits out of range");
}

}  // namespace vsaforge
