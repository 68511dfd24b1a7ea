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

#include "doctest.h"
#include "vsaforge/bits.hpp"
#include "vsaforge/rng.hpp"

using namespace vsaforge;

TEST_CASE("copy_bits moves arbitrary unaligned ranges") {
  std::vector<Word> src(4, 0), dst(4, 0);
  Rng rng(99);
  for (auto& w : src) w = rng.next();

  // reference: bit-by-bit copy
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t soff = rng.next_below(120);
    const std::size_t doff = rng.next_below(120);
    const std::size_t count = 1 + rng.next_below(130);
    std::vector<Word> got(4, ~Word{0});
    std::vector<Word> want(4, ~Word{0});
    copy_bits(src, soff, got, doff, count);
    for (std::size_t i = 0; i < count; ++i)
      set_bit(std::span<Word>(want), doff + i, get_bit(src, soff + i));
    CHECK(got == want);
  }
}

TEST_CASE("popcount_bits honors the bit limit") {
  std::vector<Word> w{~Word{0}, ~Word{0}};
  CHECK(popcount_bits(w, 128) == 128);
  CHECK(popcount_bits(w, 70) == 70);
  CHECK(popcount_bits(w, 1) == 1);
}

TEST_CASE("counter rng is stable and splittable") {
  CHECK(stream_word(42, 0) == stream_word(42, 0));
  CHECK(stream_word(42, 0) != stream_word(42, 1));
  CHECK(stream_word(42, 0) != stream_word(43, 0));
  CHECK(derive_seed(1, 2) != derive_seed(1, 3));
  CHECK(derive_seed(1, 2) != derive_seed(2, 2));

  Rng a(7), b(7);
  for (int i = 0; i < 10; ++i) CHECK(a.next() == b.next());
}

TEST_CASE("next_below stays in range") {
  Rng rng(5);
  for (int i = 0; i < 1000; ++i) CHECK(rng.next_below(13) < 13);
}
