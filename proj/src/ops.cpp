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

#include "vsaforge/ops.hpp"

#include <bit>
#include <cmath>
#include <string>

#include "vsaforge/errors.hpp"
#include "vsaforge/rng.hpp"

namespace vsaforge {

void check_operable(const Hypervector& a, const Hypervector& b) {
  if (a.dim() != b.dim() || a.fold_width() != b.fold_width())
    throw DimensionError("hypervectors are not operable: (" + std::to_string(a.dim()) +
                         "," + std::to_string(a.fold_width()) + ") vs (" +
                         std::to_string(b.dim()) + "," + std::to_string(b.fold_width()) + ")");
}

Hypervector random_hv(std::uint32_t dim, std::uint32_t fold_width, std::uint64_t seed) {
  Hypervector out(dim, fold_width);
  auto w = out.words();
  for (std::size_t i = 0; i < w.size(); ++i) w[i] = stream_word(seed, i);
  mask_tail(w, dim);
  return out;
}

Hypervector bind(const Hypervector& a, const Hypervector& b) {
  check_operable(a, b);
  Hypervector out = a;
  auto w = out.words();
  auto bw = b.words();
  for (std::size_t i = 0; i < w.size(); ++i) w[i] ^= bw[i];
  return out;
}

Hypervector unbind(const Hypervector& a, const Hypervector& b) { return bind(a, b); }

Hypervector permute(const Hypervector& v, std::uint64_t times) {
  const std::uint32_t d = v.dim();
  const std::uint32_t t = static_cast<std::uint32_t>(times % d);
  if (t == 0) return v;
  Hypervector out(d, v.fold_width());
  copy_bits(v.words(), t, out.words(), 0, d - t);
  copy_bits(v.words(), 0, out.words(), d - t, t);
  return out;
}

Accumulator accumulate(Accumulator acc, const Hypervector& v, std::int32_t weight) {
  if (acc.dim() != v.dim() || acc.fold_width() != v.fold_width())
    throw DimensionError("accumulate: dimension mismatch");
  const std::int64_t limit = (std::int64_t{1} << (acc.h_bits() - 1));
  if (weight >= limit || weight <= -limit)
    throw ConfigError("accumulate: |weight| must be < 2^(H-1)");
  if (weight == 0) return acc;
  for (std::uint32_t i = 0; i < v.dim(); ++i)
    acc.add_to_lane(i, v.bit(i) ? -std::int64_t{weight} : std::int64_t{weight});
  return acc;
}

Hypervector sign(const Accumulator& acc) {
  Hypervector out(acc.dim(), acc.fold_width());
  for (std::uint32_t i = 0; i < acc.dim(); ++i)
    if (acc.lane(i) < 0) out.set_bit(i, true);
  return out;
}

Hypervector bundle(std::span<const Hypervector> vs, Precision p) {
  if (vs.empty()) throw ConfigError("bundle: empty list");
  Accumulator acc(vs[0].dim(), vs[0].fold_width(), p.h_bits);
  for (const auto& v : vs) acc = accumulate(std::move(acc), v, 1);
  return sign(acc);
}

std::uint64_t hamming(const Hypervector& a, const Hypervector& b) {
  check_operable(a, b);
  std::uint64_t total = 0;
  auto aw = a.words();
  auto bw = b.words();
  for (std::size_t i = 0; i < aw.size(); ++i) total += std::popcount(aw[i] ^ bw[i]);
  return total;
}

SimilarityScore dot(const Hypervector& a, const Hypervector& b, int c_bits) {
  const std::int64_t raw = std::int64_t{a.dim()} - 2 * static_cast<std::int64_t>(hamming(a, b));
  return SimilarityScore{saturate(raw, c_bits), c_bits};
}

std::int64_t fold_pop_diff(const Fold& a, const Fold& b) {
  if (a.width() != b.width()) throw DimensionError("fold width mismatch");
  return std::int64_t{a.width()} - 2 * static_cast<std::int64_t>((a ^ b).popcount());
}

SimilarityScore fold_dot(const Hypervector& a, const Hypervector& b, int c_bits) {
  check_operable(a, b);
  std::int64_t acc = 0;
  for (std::uint32_t k = 0; k < a.num_folds(); ++k) {
    acc = saturate(acc + fold_pop_diff(a.fold(k), b.fold(k)), c_bits);
  }
  return SimilarityScore{acc, c_bits};
}

SimilarityScore similarity(const Hypervector& a, const Hypervector& b, Metric m,
                           int c_bits) {
  switch (m) {
    case Metric::kDot:
      return dot(a, b, c_bits);
    case Metric::kHamming:
      return SimilarityScore{saturate(static_cast<std::int64_t>(hamming(a, b)), c_bits),
                             c_bits};
    default:
      throw DimensionError("l1/l2 metrics take accumulator operands");
  }
}

SimilarityScore similarity(const Accumulator& a, const Accumulator& b, Metric m,
                           int c_bits) {
  if (a.dim() != b.dim()) throw DimensionError("similarity: dimension mismatch");
  std::int64_t acc = 0;
  switch (m) {
    case Metric::kL1:
      for (std::uint32_t i = 0; i < a.dim(); ++i)
        acc = saturate(acc + std::llabs(std::int64_t{a.lane(i)} - b.lane(i)), c_bits);
      return SimilarityScore{acc, c_bits};
    case Metric::kL2:
      for (std::uint32_t i = 0; i < a.dim(); ++i) {
        const std::int64_t d = std::int64_t{a.lane(i)} - b.lane(i);
        acc = saturate(acc + d * d, c_bits);
      }
      return SimilarityScore{acc, c_bits};
    default:
      throw DimensionError("dot/hamming metrics take hypervector operands");
  }
}

}  // namespace vsaforge
