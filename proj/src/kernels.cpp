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

#include "vsaforge/kernels.hpp"

#include <string>

#include "vsaforge/errors.hpp"

namespace vsaforge {

void KernelSelector::validate() const {
  if (s1 < 0 || s1 > 1) throw ConfigError("selector s1 out of range");
  if (s2 < 0 || s2 > 3) throw ConfigError("selector s2 out of range");
  if (s3 < 0 || s3 > 2) throw ConfigError("selector s3 out of range");
}

Hypervector encode_group(std::span<const Hypervector> group, int s2,
                         std::uint32_t group_index) {
  if (group.empty()) throw ConfigError("encode_group: empty group");
  switch (s2) {
    case 0:
      if (group.size() != 1)
        throw ConfigError("encode_group: s2=0 requires a single member");
      return group[0];
    case 1: {
      Hypervector out = group[0];
      for (std::size_t j = 1; j < group.size(); ++j) out = bind(out, group[j]);
      return out;
    }
    case 2:
      if (group.size() != 1)
        throw ConfigError("encode_group: s2=2 requires a single member");
      return permute(group[0], group_index);
    case 3: {
      Hypervector out = group[0];
      for (std::size_t j = 1; j < group.size(); ++j)
        out = bind(out, permute(group[j], j));
      return out;
    }
    default:
      throw ConfigError("encode_group: invalid s2=" + std::to_string(s2));
  }
}

Hypervector encode(const OperandArray& y, int s1, int s2, Precision p) {
  if (y.groups.empty()) throw ConfigError("encode: no groups");
  if (s1 == 0) {
    if (y.groups.size() != 1)
      throw ConfigError("encode: s1=0 requires exactly one group");
    return encode_group(y.groups[0], s2, 0);
  }
  if (s1 != 1) throw ConfigError("encode: invalid s1");
  std::vector<Hypervector> encoded;
  encoded.reserve(y.groups.size());
  for (std::uint32_t i = 0; i < y.groups.size(); ++i)
    encoded.push_back(encode_group(y.groups[i], s2, i));
  return bundle(encoded, p);
}

Hypervector project(std::span<const Hypervector> items,
                    std::span<const std::int32_t> weights, Precision p) {
  if (items.empty()) throw ConfigError("project: empty item list");
  if (items.size() != weights.size())
    throw DimensionError("project: items/weights length mismatch");
  const std::int32_t wmax = static_cast<std::int32_t>((1 << (p.h_bits - 1)) - 1);
  Accumulator acc(items[0].dim(), items[0].fold_width(), p.h_bits);
  for (std::size_t i = 0; i < items.size(); ++i) {
    std::int32_t w = weights[i];
    w = w > wmax ? wmax : (w < -wmax ? -wmax : w);
    acc = accumulate(std::move(acc), items[i], w);
  }
  return sign(acc);
}

std::size_t nn_search(std::span<const Hypervector> items, const Hypervector& query,
                      int c_bits) {
  if (items.empty()) throw ConfigError("nn_search: empty item list");
  std::size_t best = 0;
  std::int64_t best_val = fold_dot(items[0], query, c_bits).value;
  for (std::size_t i = 1; i < items.size(); ++i) {
    const std::int64_t v = fold_dot(items[i], query, c_bits).value;
    if (v > best_val) {  // ties keep the lowest index
      best_val = v;
      best = i;
    }
  }
  return best;
}

FactorizationResult resonator_factorize(const Hypervector& composite,
                                        std::span<const Codebook> codebooks,
                                        const ResonatorOptions& opts) {
  if (codebooks.size() < 2)
    throw ConfigError("resonator_factorize: need at least 2 codebooks");
  if (opts.max_iters < 1) throw ConfigError("resonator_factorize: max_iters < 1");

  const std::size_t nf = codebooks.size();
  std::vector<std::vector<Hypervector>> items(nf);
  for (std::size_t f = 0; f < nf; ++f) {
    for (std::uint32_t i = 0; i < codebooks[f].size(); ++i) {
      Hypervector v = codebooks[f].item(i);
      check_operable(v, composite);
      items[f].push_back(std::move(v));
    }
  }

  // Superposition of all candidates as the unbiased starting estimate.
  std::vector<Hypervector> est(nf);
  for (std::size_t f = 0; f < nf; ++f) est[f] = bundle(items[f], opts.precision);

  FactorizationResult res;
  bool fixed_point = false;
  std::uint32_t iter = 0;
  for (; iter < opts.max_iters; ++iter) {
    bool changed = false;
    for (std::size_t f = 0; f < nf; ++f) {
      // Unbind the other current estimates to expose a noisy view of factor f.
      Hypervector noisy = composite;
      for (std::size_t g = 0; g < nf; ++g)
        if (g != f) noisy = unbind(noisy, est[g]);
      const int shift = multiplier_shift(opts.precision.c_bits, opts.precision.h_bits);
      std::vector<std::int32_t> weights(items[f].size());
      for (std::size_t i = 0; i < items[f].size(); ++i)
        weights[i] = static_cast<std::int32_t>(
            fold_dot(items[f][i], noisy, opts.precision.c_bits).value >> shift);
      Hypervector updated = project(items[f], weights, opts.precision);
      if (!(updated == est[f])) {
        est[f] = std::move(updated);
        changed = true;
      }
    }
    if (!changed) {
      fixed_point = true;
      ++iter;
      break;
    }
  }
  res.iterations = iter;
  if (!opts.stop_on_convergence && fixed_point) {
    // A fixed point is stationary under further passes, so the final
    // estimates equal those of a fixed-length run; only the count differs.
    res.iterations = opts.max_iters;
  }

  res.factor_indices.reserve(nf);
  for (std::size_t f = 0; f < nf; ++f)
    res.factor_indices.push_back(static_cast<std::uint32_t>(
        nn_search(items[f], est[f], opts.precision.c_bits)));
  // Converged means decoded: the indexed items must re-bind to the input, so
  // a spurious fixed point is reported as non-convergence.
  if (fixed_point) {
    Hypervector rebind = items[0][res.factor_indices[0]];
    for (std::size_t f = 1; f < nf; ++f)
      rebind = bind(rebind, items[f][res.factor_indices[f]]);
    res.converged = rebind == composite;
  }
  res.estimates = std::move(est);
  return res;
}

KernelResult kernel_dispatch(const OperandArray& y, const KernelSelector& s,
                             Precision p) {
  s.validate();
  switch (s.s3) {
    case 0:
      return encode(y, s.s1, s.s2, p);
    case 1: {
      if (!y.weights) throw ConfigError("dispatch: projection requires weights");
      std::vector<Hypervector> items;
      for (const auto& g : y.groups) {
        if (g.size() != 1)
          throw ConfigError("dispatch: projection groups must be singletons");
        items.push_back(g[0]);
      }
      return project(items, *y.weights, p);
    }
    case 2: {
      if (!y.query) throw ConfigError("dispatch: search requires a query");
      std::vector<Hypervector> items;
      for (const auto& g : y.groups)
        for (const auto& v : g) items.push_back(v);
      return nn_search(items, *y.query, p.c_bits);
    }
    default:
      throw ConfigError("dispatch: invalid s3");
  }
}

}  // namespace vsaforge
