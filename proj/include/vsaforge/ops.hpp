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

#include "vsaforge/types.hpp"

namespace vsaforge {

/// Deterministic random hypervector: identical (dim, fold_width, seed) give
/// identical bits on every platform. Throws ConfigError if W does not divide D.
Hypervector random_hv(std::uint32_t dim, std::uint32_t fold_width, std::uint64_t seed);

/// Binding: bitwise XOR, the bipolar element-wise product. Commutative and
/// self-inverse.
Hypervector bind(const Hypervector& a, const Hypervector& b);

/// For XOR binding, unbinding is binding: unbind(bind(a,b), b) == a.
Hypervector unbind(const Hypervector& a, const Hypervector& b);

/// Circular left rotation of the full D-bit vector: result[i] = v[(i+t) mod D].
Hypervector permute(const Hypervector& v, std::uint64_t times);

/// acc += weight * bipolar(v), per lane, saturating at the accumulator's
/// h_bits. Requires |weight| < 2^(h_bits-1).
Accumulator accumulate(Accumulator acc, const Hypervector& v, std::int32_t weight);

/// Lane > 0 or == 0 -> bit 0 (+1); lane < 0 -> bit 1 (-1). The zero tie-break
/// toward +1 is deterministic by design.
Hypervector sign(const Accumulator& acc);

/// Element-wise majority with the sign() tie rule. Throws on an empty list.
Hypervector bundle(std::span<const Hypervector> vs, Precision p = Precision::wide());

std::uint64_t hamming(const Hypervector& a, const Hypervector& b);

/// Bipolar dot product D - 2*hamming(a,b), saturated once to c_bits.
SimilarityScore dot(const Hypervector& a, const Hypervector& b, int c_bits = 32);

/// Per-fold dot partials accumulated into a c_bits-saturating register, the
/// way the folded datapath aggregates them. Equals dot() when unsaturated.
SimilarityScore fold_dot(const Hypervector& a, const Hypervector& b, int c_bits = 32);

enum class Metric { kDot, kHamming, kL1, kL2 };

/// dot/hamming apply to hypervectors; l1/l2 to accumulators (l2 returns the
/// squared distance so every score stays integral). Wrong operand kind for the
/// metric raises DimensionError.
SimilarityScore similarity(const Hypervector& a, const Hypervector& b, Metric m,
                           int c_bits = 32);
SimilarityScore similarity(const Accumulator& a, const Accumulator& b, Metric m,
                           int c_bits = 32);

/// W - 2*popcount(a XOR b): the per-fold POPCNT distance partial.
std::int64_t fold_pop_diff(const Fold& a, const Fold& b);

void check_operable(const Hypervector& a, const Hypervector& b);

}  // namespace vsaforge
