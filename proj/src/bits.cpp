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

#include "vsaforge/bits.hpp"

#include <bit>

namespace vsaforge {

std::size_t popcount_bits(std::span<const Word> w, std::size_t nbits) {
  std::size_t total = 0;
  std::size_t full = nbits / kWordBits;
  for (std::size_t i = 0; i < full; ++i) total += std::popcount(w[i]);
  const std::size_t rem = nbits % kWordBits;
  if (rem != 0) total += std::popcount(w[full] & ((Word{1} << rem) - 1));
  return total;
}

namespace {

// Reads `count` (<= 64) bits starting at bit offset `off`.
Word read_chunk(std::span<const Word> src, std::size_t off, std::size_t count) {
  const std::size_t wi = off / kWordBits;
  const std::size_t sh = off % kWordBits;
  Word v = src[wi] >> sh;
  if (sh != 0 && wi + 1 < src.size() && sh + count > kWordBits)
    v |= src[wi + 1] << (kWordBits - sh);
  if (count < kWordBits) v &= (Word{1} << count) - 1;
  return v;
}

// Writes the low `count` (<= 64) bits of v at bit offset `off`.
void write_chunk(std::span<Word> dst, std::size_t off, std::size_t count, Word v) {
  const std::size_t wi = off / kWordBits;
  const std::size_t sh = off % kWordBits;
  const Word mask = (count == kWordBits) ? ~Word{0} : ((Word{1} << count) - 1);
  dst[wi] = (dst[wi] & ~(mask << sh)) | ((v & mask) << sh);
  if (sh != 0 && sh + count > kWordBits) {
    const std::size_t hi = sh + count - kWordBits;  // bits spilling into next word
    const Word himask = (Word{1} << hi) - 1;
    dst[wi + 1] = (dst[wi + 1] & ~himask) | ((v >> (kWordBits - sh)) & himask);
  }
}

}  // namespace

void copy_bits(std::span<const Word> src, std::size_t src_off,
               std::span<Word> dst, std::size_t dst_off, std::size_t count) {
  while (count > 0) {
    const std::size_t n = count < kWordBits ? count : kWordBits;
    write_chunk(dst, dst_off, n, read_chunk(src, src_off, n));
    src_off += n;
    dst_off += n;
    count -= n;
  }
}

}  // namespace vsaforge
