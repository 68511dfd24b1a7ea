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
#include <optional>
#include <variant>
#include <vector>

#include "vsaforge/codebook.hpp"
#include "vsaforge/ops.hpp"
#include "vsaforge/types.hpp"

namespace vsaforge {

/// Control variables selecting the kernel behavior:
///   s3 = 0 -> encode (s1 selects bundling over groups, s2 the group encoding)
///   s3 = 1 -> weighted projection
///   s3 = 2 -> nearest-neighbor search
struct KernelSelector {
  int s1 = 0;  // 0: single group, 1: bundle over groups
  int s2 = 0;  // 0: pass-through, 1: bind, 2: position-permute, 3: permuted bind
  int s3 = 0;

  void validate() const;
};

/// Operand bundle for kernel dispatch: item/prototype vectors arranged in
/// groups, plus an optional query and per-group weights.
struct OperandArray {
  std::vector<std::vector<Hypervector>> groups;
  std::optional<Hypervector> query;
  std::optional<std::vector<std::int32_t>> weights;
};

struct FactorizationResult {
  std::vector<std::uint32_t> factor_indices;
  std::uint32_t iterations = 0;
  bool converged = false;
  std::vector<Hypervector> estimates;  // final sign-quantized estimates
};

/// Group encoding b(y,(s2)). `group_index` is the group's 0-based position in
/// the enclosing array; it supplies the permutation count for s2=2.
/// s2 = 0: pass-through (single member required)
/// s2 = 1: bind of all members
/// s2 = 2: the single member permuted group_index times
/// s2 = 3: bind of members, member m permuted m times
Hypervector encode_group(std::span<const Hypervector> group, int s2,
                         std::uint32_t group_index = 0);

/// a(y,(s1,s2)): s1=0 encodes the single group; s1=1 bundles the per-group
/// encodings (sum then sign).
Hypervector encode(const OperandArray& y, int s1, int s2,
                   Precision p = Precision::wide());

/// c(y): sign of the weighted sum of items. Weights are clamped to the H-bit
/// range before multiplication; lanes saturate at H bits.
Hypervector project(std::span<const Hypervector> items,
                    std::span<const std::int32_t> weights,
                    Precision p = Precision::wide());

/// e(y) = argmax_i d(y_i, query) with folded-dot similarity; ties resolve to
/// the lowest index.
std::size_t nn_search(std::span<const Hypervector> items, const Hypervector& query,
                      int c_bits = 32);

struct ResonatorOptions {
  std::uint32_t max_iters = 60;
  Precision precision{};       // hardware-width weights by default
  bool stop_on_convergence = true;
};

/// Iterative resonator factorization of a bound composite. Estimates start as
/// the bundle of each codebook; each pass unbinds the other current estimates,
/// scores every candidate by folded dot, and projects. Estimates stay
/// sign-quantized between iterations, matching the binary datapath.
FactorizationResult resonator_factorize(const Hypervector& composite,
                                        std::span<const Codebook> codebooks,
                                        const ResonatorOptions& opts = {});

using KernelResult = std::variant<Hypervector, std::size_t>;

/// F(y,(s1,s2,s3)): dispatches to encode, project, or nn_search. Every
/// in-range selector either produces a result or raises a typed operand error.
KernelResult kernel_dispatch(const OperandArray& y, const KernelSelector& s,
                             Precision p = Precision::wide());

}  // namespace vsaforge
