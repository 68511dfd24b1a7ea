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

#include <cmath>
#include <sstream>

#include "doctest.h"
#include "vsaforge/codebook.hpp"
#include "vsaforge/errors.hpp"
#include "vsaforge/ops.hpp"
#include "vsaforge/rng.hpp"

using namespace vsaforge;

namespace {

// Cell-by-cell rule-90 oracle, independent of the rotate-based implementation.
Fold rule90_oracle(const Fold& f) {
  Fold out(f.width());
  const std::uint32_t w = f.width();
  for (std::uint32_t i = 0; i < w; ++i) {
    const bool left = f.bit((i + w - 1) % w);
    const bool right = f.bit((i + 1) % w);
    out.set_bit(i, left != right);
  }
  return out;
}

}  // namespace

TEST_CASE("ca90_step matches the rule-90 neighborhood") {
  Fold f(8);
  f.set_bit(3, true);
  const auto s1 = ca90_step(f);
  for (std::uint32_t i = 0; i < 8; ++i) CHECK(s1.bit(i) == (i == 2 || i == 4));

  const auto s2 = ca90_step(s1);
  for (std::uint32_t i = 0; i < 8; ++i) CHECK(s2.bit(i) == (i == 1 || i == 5));
  CHECK(s2 == rule90_oracle(rule90_oracle(f)));

  const Fold zero(8);
  CHECK(ca90_step(zero) == zero);

  // random widths vs the oracle, including non-word-aligned ones
  for (std::uint32_t w : {5u, 48u, 64u, 65u, 512u}) {
    const auto r = Fold::random(w, derive_seed(7, w));
    CHECK(ca90_step(r) == rule90_oracle(r));
  }
}

TEST_CASE("ca90_step is linear over XOR") {
  for (int t = 0; t < 50; ++t) {
    const auto a = Fold::random(96, derive_seed(100, t));
    const auto b = Fold::random(96, derive_seed(101, t));
    CHECK(ca90_step(a ^ b) == (ca90_step(a) ^ ca90_step(b)));
  }
}

TEST_CASE("expand applies one step per fold index") {
  const auto seed = Fold::random(64, 17);
  const auto one = expand(seed, 1);
  REQUIRE(one.size() == 1);
  CHECK(one[0] == seed);

  const auto three = expand(seed, 3);
  CHECK(three[2] == ca90_step(ca90_step(seed)));

  CHECK_THROWS_AS(expand(seed, 0), ConfigError);
}

TEST_CASE("expanded folds are pairwise quasi-orthogonal") {
  double worst = 0;
  for (int s = 0; s < 100; ++s) {
    const auto seed = Fold::random(512, derive_seed(200, s));
    const auto folds = expand(seed, 8);
    for (std::size_t i = 0; i < folds.size(); ++i)
      for (std::size_t j = i + 1; j < folds.size(); ++j) {
        const double nd =
            std::abs(static_cast<double>(fold_pop_diff(folds[i], folds[j]))) / 512.0;
        if (nd > worst) worst = nd;
      }
  }
  CHECK(worst < 0.3);
}

TEST_CASE("codebook items are deterministic CA expansions") {
  const auto cb = Codebook::random("items", 8, 2048, 512, 33);
  CHECK(cb.item(3) == cb.item(3));

  // D = W: the item is the seed verbatim
  const auto flat = Codebook::random("flat", 4, 512, 512, 34);
  CHECK(flat.item(2).fold(0) == flat.seed(2));

  // independent 4-step expansion at D=2048, W=512
  const auto folds = cb.item(0);
  Fold cur = cb.seed(0);
  for (std::uint32_t k = 0; k < 4; ++k) {
    CHECK(folds.fold(k) == cur);
    cur = rule90_oracle(cur);
  }

  CHECK_THROWS_AS(cb.item(8), ConfigError);
}

TEST_CASE("codebook rejects zero seeds") {
  std::vector<Fold> seeds{Fold(16)};  // all-zero
  CHECK_THROWS_AS(Codebook("bad", 32, 16, std::move(seeds)), ConfigError);
}

TEST_CASE("footprint compression ratio equals the fold count") {
  const auto cb = Codebook::random("fp", 120, 2048, 512, 35);
  CHECK(cb.footprint(true) == 7680);
  CHECK(cb.footprint(false) == 30720);
  CHECK(cb.footprint(false) / cb.footprint(true) == 4);

  const auto l1 = Codebook::random("l1", 13, 512, 512, 36);
  CHECK(l1.footprint(true) == 832);
  CHECK(l1.footprint(false) == 832);
}

TEST_CASE("codebook file round-trip and validation") {
  const auto cb = Codebook::random("rt", 7, 128, 64, 37);
  std::stringstream ss;
  write_codebook(ss, cb);
  const auto back = read_codebook(ss, "rt");
  CHECK(back.size() == cb.size());
  CHECK(back.dim() == cb.dim());
  CHECK(back.fold_width() == cb.fold_width());
  for (std::uint32_t i = 0; i < cb.size(); ++i) CHECK(back.seed(i) == cb.seed(i));

  std::string bad = ss.str();
  bad[1] = 'X';
  std::stringstream ss2(bad);
  CHECK_THROWS_AS(read_codebook(ss2, "x"), IoError);
}
