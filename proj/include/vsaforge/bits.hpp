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
#include <cstddef>
#include <span>
#include <vector>

namespace vsaforge {

using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

constexpr std::size_t words_for_bits(std::size_t nbits) {
  return (nbits + kWordBits - 1) / kWordBits;
}

inline bool get_bit(std::span<const Word> w, std::size_t i) {
  return (w[i / kWordBits] >> (i % kWordBits)) & 1u;
}

inline void set_bit(std::span<Word> w, std::size_t i, bool v) {
  const Word mask = Word{1} << (i % kWordBits);
  if (v)
    w[i / kWordBits] |= mask;
  else
    w[i / kWordBits] &= ~mask;
}

/// Clears any bits at positions >= nbits in the final word.
inline void mask_tail(std::span<Word> w, std::size_t nbits) {
  const std::size_t rem = nbits % kWordBits;
  if (rem != 0 && !w.empty()) w[nbits / kWordBits] &= (Word{1} << rem) - 1;
}

std::size_t popcount_bits(std::span<const Word> w, std::size_t nbits);

/// Copies `count` bits from src (starting at src_off) into dst (starting at
/// dst_off). Bit positions use LSB-first order within each 64-bit word.
/// Source and destination must not alias.
void copy_bits(std::span<const Word> src, std::size_t src_off,
               std::span<Word> dst, std::size_t dst_off, std::size_t count);

}  // namespace vsaforge
