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

#include "vsaforge/workloads.hpp"

#include <algorithm>

#include "vsaforge/builder.hpp"
#include "vsaforge/errors.hpp"
#include "vsaforge/kernels.hpp"
#include "vsaforge/rng.hpp"

// Every builder below produces the device op stream and the functional golden
// from the same data, keeping per-lane accumulation orders identical (items
// ascending, folds ascending) so the saturating arithmetic agrees bit for bit.

namespace vsaforge::wl {

namespace {

using sim::Placement;
using sim::ProgramBuilder;
using sim::Region;

std::vector<Fold> hv_folds(const Hypervector& v) {
  std::vector<Fold> out;
  out.reserve(v.num_folds());
  for (std::uint32_t k = 0; k < v.num_folds(); ++k) out.push_back(v.fold(k));
  return out;
}

Region seeds_region(std::string name, const Codebook& cb, Placement placement) {
  Region r;
  r.name = std::move(name);
  r.placement = placement;
  r.vec_folds = 1;
  r.data = cb.seeds();
  return r;
}

Region stored_region(std::string name, Placement placement,
                     const std::vector<Hypervector>& vecs) {
  Region r;
  r.name = std::move(name);
  r.placement = placement;
  r.vec_folds = vecs.empty() ? 1 : vecs[0].num_folds();
  for (const auto& v : vecs)
    for (auto& f : hv_folds(v)) r.data.push_back(std::move(f));
  return r;
}

Region scratch_region(std::string name, Placement placement, std::uint32_t vectors,
                      std::uint32_t vec_folds) {
  Region r;
  r.name = std::move(name);
  r.placement = placement;
  r.vec_folds = vec_folds;
  r.reserve_vectors = vectors;
  return r;
}

/// Emits all ops so the stream register holds fold k exactly (no ride).
void position_exact(ProgramBuilder& b, ProgramBuilder::Stream& s, std::uint32_t k) {
  if (b.position(s, k)) b.emit(isa::rf_step(s.rf));
}

/// Fold-chunk spans bounded by the BND register count.
std::vector<std::pair<std::uint32_t, std::uint32_t>> fold_chunks(const AccConfig& cfg,
                                                                 std::uint32_t l) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  for (std::uint32_t c0 = 0; c0 < l; c0 += cfg.bnd_rf_regs)
    out.emplace_back(c0, std::min(l, c0 + cfg.bnd_rf_regs));
  return out;
}

// ---------------------------------------------------------------------------
// MULT: bound-and-bundled records classified against bundled class prototypes.
// Record encoding runs fold-striped across tiles; prototype reduction and the
// query scans use the distributed layouts.
// ---------------------------------------------------------------------------

struct MultData {
  Codebook items;
  std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> sample_pairs;
  std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> query_pairs;
};

MultData gen_mult_data(const WorkloadParams& p) {
  MultData d{Codebook::random("items", p.mult_items, p.dim, p.fold_width,
                              derive_seed(p.seed, 101)),
             {},
             {}};
  Rng rng(derive_seed(p.seed, 102));
  const auto draw_pairs = [&] {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
    for (std::uint32_t j = 0; j < p.mult_pairs; ++j)
      pairs.emplace_back(static_cast<std::uint32_t>(rng.next_below(p.mult_items)),
                         static_cast<std::uint32_t>(rng.next_below(p.mult_items)));
    return pairs;
  };
  for (std::uint32_t s = 0; s < p.mult_samples; ++s) d.sample_pairs.push_back(draw_pairs());
  for (std::uint32_t q = 0; q < p.mult_queries; ++q) d.query_pairs.push_back(draw_pairs());
  return d;
}

Hypervector encode_record_oracle(
    const Codebook& items,
    const std::vector<std::pair<std::uint32_t, std::uint32_t>>& pairs, Precision prec) {
  OperandArray y;
  for (const auto& [k, v] : pairs) y.groups.push_back({items.item(k), items.item(v)});
  return encode(y, 1, 1, prec);
}

/// Striped record encode: all folds advance at once, one stripe round per
/// ceil(L/A) groups of tiles. Uses CA RF registers 0 and 1.
void emit_record_encode(ProgramBuilder& b, const std::string& seed_rgn,
                        const std::vector<std::pair<std::uint32_t, std::uint32_t>>& pairs,
                        const std::string& dest_rgn, std::uint32_t dest_v) {
  const auto& cfg = b.config();
  const std::uint32_t a = cfg.active_tiles();
  const std::uint32_t l = b.folds();
  for (std::uint32_t e = 0; e < l; e += a) {
    for (std::uint32_t j = 0; j < pairs.size(); ++j) {
      b.emit(isa::seed_to_rf_striped(b.slot_of(seed_rgn, pairs[j].first), 0,
                                     static_cast<std::uint8_t>(e)));
      b.emit(isa::rf_to_bb(0, false, true));
      b.emit(isa::seed_to_rf_striped(b.slot_of(seed_rgn, pairs[j].second), 1,
                                     static_cast<std::uint8_t>(e)));
      b.emit(isa::rf_cvt_acc(1, false, 0, j == 0, true));
    }
    b.store_sign(dest_rgn, dest_v, e, 0);
  }
}

void build_mult(const AccConfig& cfg, const WorkloadParams& p, BuiltWorkload& out) {
  const MultData d = gen_mult_data(p);
  const Precision prec{static_cast<int>(cfg.bnd_bits), static_cast<int>(cfg.distance_bits)};
  const std::uint32_t l = p.folds();

  // oracle
  std::vector<Hypervector> sample_enc;
  for (const auto& pairs : d.sample_pairs)
    sample_enc.push_back(encode_record_oracle(d.items, pairs, prec));
  std::vector<Hypervector> protos;
  for (std::uint32_t c = 0; c < p.mult_classes; ++c) {
    std::vector<Hypervector> members;
    for (std::uint32_t s = c; s < p.mult_samples; s += p.mult_classes)
      members.push_back(sample_enc[s]);
    protos.push_back(bundle(members, prec));
  }
  for (const auto& pairs : d.query_pairs) {
    auto enc = encode_record_oracle(d.items, pairs, prec);
    out.expected.push_back(
        static_cast<std::uint32_t>(nn_search(protos, enc, prec.c_bits)));
    out.query_vectors.push_back(std::move(enc));
  }

  // device program
  ProgramBuilder b(cfg);
  b.set_folds(l);
  b.add_region(seeds_region("items", d.items, Placement::kReplicated));
  b.add_region(scratch_region("samples", Placement::kStriped, p.mult_samples, l));
  b.add_region(scratch_region("protos", Placement::kDistributed, p.mult_classes, l));
  b.add_region(scratch_region("qbuf", Placement::kStriped, 1, l));

  for (std::uint32_t s = 0; s < p.mult_samples; ++s)
    emit_record_encode(b, "items", d.sample_pairs[s], "samples", s);

  // class-by-class reduction of stored sample vectors, samples ascending
  const std::uint32_t a = cfg.active_tiles();
  for (std::uint32_t c = 0; c < p.mult_classes; ++c) {
    for (const auto& [c0, c1] : fold_chunks(cfg, l)) {
      bool first = true;
      for (std::uint32_t s = c; s < p.mult_samples; s += p.mult_classes) {
        for (std::uint32_t k = c0; k < c1; ++k)
          b.emit(isa::mem_cvt_acc_bcast(b.slot_of("samples", s, k),
                                        static_cast<std::uint8_t>(k % a),
                                        static_cast<std::uint8_t>(k - c0), first));
        first = false;
      }
      for (std::uint32_t k = c0; k < c1; ++k)
        b.emit(isa::sgn_store_owned(static_cast<std::uint8_t>(k - c0),
                                    b.slot_of("protos", c, k),
                                    static_cast<std::uint8_t>(c % a)));
    }
  }

  for (const auto& pairs : d.query_pairs) {
    emit_record_encode(b, "items", pairs, "qbuf", 0);
    b.load_query("qbuf", 0);
    b.scan_region("protos");
  }

  out.codebooks.push_back(d.items);
  out.image = b.take_image();
  out.ops = b.take_ops();
}

// ---------------------------------------------------------------------------
// TREE: role-permuted path encodings searched with clean-up memory scans.
// Permutations run through the CA funnel unit, so fold k of a rotated item is
// rebuilt from its folds k and k+1.
// ---------------------------------------------------------------------------

struct TreeData {
  Codebook items;
  std::vector<std::vector<std::uint32_t>> paths;
  std::vector<std::uint32_t> query_tree;
};

TreeData gen_tree_data(const WorkloadParams& p) {
  TreeData d{Codebook::random("items", p.tree_items, p.dim, p.fold_width,
                              derive_seed(p.seed, 201)),
             {},
             {}};
  Rng rng(derive_seed(p.seed, 202));
  for (std::uint32_t t = 0; t < p.tree_count; ++t) {
    std::vector<std::uint32_t> path;
    for (std::uint32_t m = 0; m < p.tree_depth; ++m)
      path.push_back(static_cast<std::uint32_t>(rng.next_below(p.tree_items)));
    d.paths.push_back(std::move(path));
  }
  for (std::uint32_t q = 0; q < p.tree_queries; ++q)
    d.query_tree.push_back(static_cast<std::uint32_t>(rng.next_below(p.tree_count)));
  return d;
}

Hypervector encode_path_oracle(const Codebook& items,
                               const std::vector<std::uint32_t>& path) {
  std::vector<Hypervector> members;
  for (auto i : path) members.push_back(items.item(i));
  return encode_group(members, 3);
}

/// Serial path encode via funnel shifts; uses CA RF registers 0 and 1.
void emit_path_encode(ProgramBuilder& b, const std::string& seed_rgn,
                      const std::vector<std::uint32_t>& path,
                      const std::string& dest_rgn, std::uint32_t dest_v, bool owned,
                      std::uint8_t owner) {
  const std::uint32_t l = b.folds();
  for (std::uint32_t k = 0; k < l; ++k) {
    for (std::uint32_t m = 0; m < path.size(); ++m) {
      if (m == 0) {
        auto s = b.open_stream(seed_rgn, path[0], 0);
        const bool ride = b.position(s, k);
        b.emit(isa::rf_to_bb(0, ride, true));
      } else {
        auto sa = b.open_stream(seed_rgn, path[m], 0);
        position_exact(b, sa, k);
        auto sb = b.open_stream(seed_rgn, path[m], 1);
        position_exact(b, sb, (k + 1) % l);
        b.emit(isa::shf_bind(0, 1, static_cast<std::uint8_t>(m), false));
      }
    }
    if (owned)
      b.emit(isa::bb_store_owned(b.slot_of(dest_rgn, dest_v, k), owner));
    else
      b.store_bb(dest_rgn, dest_v, k);
  }
}

void build_tree(const AccConfig& cfg, const WorkloadParams& p, BuiltWorkload& out) {
  const TreeData d = gen_tree_data(p);
  const Precision prec{static_cast<int>(cfg.bnd_bits), static_cast<int>(cfg.distance_bits)};
  const std::uint32_t l = p.folds();

  std::vector<Hypervector> trees;
  for (const auto& path : d.paths) trees.push_back(encode_path_oracle(d.items, path));
  for (auto qt : d.query_tree) {
    auto probe = encode_path_oracle(d.items, d.paths[qt]);
    out.expected.push_back(
        static_cast<std::uint32_t>(nn_search(trees, probe, prec.c_bits)));
    out.query_vectors.push_back(std::move(probe));
  }

  ProgramBuilder b(cfg);
  b.set_folds(l);
  b.add_region(seeds_region("items", d.items, Placement::kReplicated));
  b.add_region(scratch_region("trees", Placement::kDistributed, p.tree_count, l));
  b.add_region(scratch_region("qbuf", Placement::kReplicated, 1, l));

  const std::uint32_t a = cfg.active_tiles();
  for (std::uint32_t t = 0; t < p.tree_count; ++t)
    emit_path_encode(b, "items", d.paths[t], "trees", t, true,
                     static_cast<std::uint8_t>(t % a));

  for (auto qt : d.query_tree) {
    emit_path_encode(b, "items", d.paths[qt], "qbuf", 0, false, 0);
    b.load_query("qbuf", 0);
    b.scan_region("trees");
  }

  out.codebooks.push_back(d.items);
  out.image = b.take_image();
  out.ops = b.take_ops();
}

// ---------------------------------------------------------------------------
// FACT: resonator-network factorization. Factor codebooks are 13-item slices
// of the 120-vector item pool; seeds live replicated for the projection feeds
// and distributed for the weight scans. The device runs the fixed iteration
// budget; a reached fixed point is stationary, so the functional oracle may
// stop early with identical results.
// ---------------------------------------------------------------------------

struct FactData {
  Codebook pool;
  std::vector<Codebook> factor_books;
  std::vector<std::vector<std::uint32_t>> true_factors;  // per composite
  std::vector<Hypervector> composites;
};

FactData gen_fact_data(const WorkloadParams& p) {
  if (p.fact_factors * p.fact_prototypes > p.fact_item_pool)
    throw ConfigError("fact: factor slices exceed the item pool");
  FactData d{Codebook::random("pool", p.fact_item_pool, p.dim, p.fold_width,
                              derive_seed(p.seed, 301)),
             {},
             {},
             {}};
  for (std::uint32_t f = 0; f < p.fact_factors; ++f) {
    std::vector<Fold> seeds;
    for (std::uint32_t i = 0; i < p.fact_prototypes; ++i)
      seeds.push_back(d.pool.seed(f * p.fact_prototypes + i));
    d.factor_books.emplace_back("factor" + std::to_string(f), p.dim, p.fold_width,
                                std::move(seeds));
  }
  Rng rng(derive_seed(p.seed, 302));
  for (std::uint32_t c = 0; c < p.fact_composites; ++c) {
    std::vector<std::uint32_t> chosen;
    Hypervector comp;
    for (std::uint32_t f = 0; f < p.fact_factors; ++f) {
      const auto i = static_cast<std::uint32_t>(rng.next_below(p.fact_prototypes));
      chosen.push_back(i);
      comp = f == 0 ? d.factor_books[f].item(i) : bind(comp, d.factor_books[f].item(i));
    }
    d.true_factors.push_back(std::move(chosen));
    d.composites.push_back(std::move(comp));
  }
  return d;
}

void build_fact(const AccConfig& cfg, const WorkloadParams& p, BuiltWorkload& out) {
  const FactData d = gen_fact_data(p);
  const Precision prec{static_cast<int>(cfg.bnd_bits), static_cast<int>(cfg.distance_bits)};
  const std::uint32_t l = p.folds();
  const std::uint32_t nf = p.fact_factors;
  const std::uint32_t m = p.fact_prototypes;

  for (const auto& comp : d.composites) {
    const auto res =
        resonator_factorize(comp, d.factor_books, {p.fact_iterations, prec, true});
    for (auto i : res.factor_indices) out.expected.push_back(i);
    out.query_vectors.push_back(comp);
  }

  ProgramBuilder b(cfg);
  b.set_folds(l);
  b.add_region(seeds_region("pool", d.pool, Placement::kReplicated));
  for (std::uint32_t f = 0; f < nf; ++f)
    b.add_region(seeds_region("cb" + std::to_string(f), d.factor_books[f],
                              Placement::kDistributed));
  b.add_region(stored_region("composites", Placement::kReplicated, d.composites));
  b.add_region(scratch_region("est", Placement::kReplicated, nf, l));
  b.add_region(scratch_region("ybuf", Placement::kReplicated, 1, l));

  const std::uint32_t a = cfg.active_tiles();
  const std::uint32_t batch = std::min(cfg.ca90_rf_regs, cfg.dsum_regs);
  const std::uint32_t local = (m + a - 1) / a;
  const auto chunks = fold_chunks(cfg, l);

  const auto pool_item = [&](std::uint32_t f, std::uint32_t i) {
    return f * m + i;
  };

  for (std::uint32_t comp = 0; comp < d.composites.size(); ++comp) {
    // initial estimates: superposition of each factor's candidates
    for (std::uint32_t f = 0; f < nf; ++f) {
      for (const auto& [c0, c1] : chunks) {
        for (std::uint32_t i = 0; i < m; ++i) {
          auto s = b.open_stream("pool", pool_item(f, i), 0);
          bool ride = b.position(s, c0);
          for (std::uint32_t k = c0; k < c1; ++k) {
            b.emit(isa::rf_cvt_acc(0, k == c0 ? ride : true,
                                   static_cast<std::uint8_t>(k - c0), i == 0, false));
            s.fold = static_cast<std::int32_t>(k);
          }
        }
        for (std::uint32_t k = c0; k < c1; ++k)
          b.store_sign("est", f, k, static_cast<std::uint8_t>(k - c0));
      }
    }

    for (std::uint32_t it = 0; it < p.fact_iterations; ++it) {
      for (std::uint32_t f = 0; f < nf; ++f) {
        // noisy view of factor f: composite unbound by the other estimates
        for (std::uint32_t k = 0; k < l; ++k) {
          b.emit(isa::mem_to_bb(b.slot_of("composites", comp, k), true));
          for (std::uint32_t g = 0; g < nf; ++g)
            if (g != f) b.emit(isa::mem_to_bb(b.slot_of("est", g, k), false));
          b.store_bb("ybuf", 0, k);
        }
        b.load_query("ybuf", 0);

        const std::string cb = "cb" + std::to_string(f);
        const auto& cb_lay = b.region(cb);
        for (const auto& [c0, c1] : chunks) {
          for (std::uint32_t s0 = 0; s0 < local; s0 += batch) {
            const std::uint32_t bl = std::min(batch, local - s0);
            // weights for this batch: full folded dot into the DSUM registers
            for (std::uint32_t k = 0; k < l; ++k) {
              for (std::uint32_t i = 0; i < bl; ++i) {
                if (k == 0) {
                  b.emit(isa::seed_pop(
                      static_cast<std::uint16_t>(cb_lay.base + s0 + i),
                      static_cast<std::uint8_t>(i), static_cast<std::uint8_t>(i),
                      true));
                } else {
                  b.emit(isa::rf_pop(static_cast<std::uint8_t>(i), true,
                                     static_cast<std::uint8_t>(k),
                                     static_cast<std::uint8_t>(i), false));
                }
              }
            }
            // projection contribution of the batch, items in ascending global
            // order so the saturating lanes accumulate exactly like the oracle
            for (std::uint32_t k = c0; k < c1; ++k) {
              b.emit(isa::bnd_target(static_cast<std::uint8_t>(k - c0)));
              for (std::uint32_t s = s0; s < s0 + bl; ++s) {
                for (std::uint32_t pos = 0; pos < a; ++pos) {
                  const std::uint32_t g = pos + a * s;
                  if (g >= m) continue;
                  auto st = b.open_stream("pool", pool_item(f, g), 0);
                  const bool ride = b.position(st, k);
                  b.emit(isa::rf_muld_acct(0, ride, static_cast<std::uint8_t>(s - s0),
                                           static_cast<std::uint8_t>(pos),
                                           s0 == 0 && g == 0));
                }
              }
            }
          }
          for (std::uint32_t k = c0; k < c1; ++k)
            b.store_sign("est", f, k, static_cast<std::uint8_t>(k - c0));
        }
      }
    }

    // clean-up search of each final estimate in its factor codebook
    for (std::uint32_t f = 0; f < nf; ++f) {
      b.load_query("est", f);
      b.scan_region("cb" + std::to_string(f));
    }
  }

  out.codebooks = d.factor_books;
  out.image = b.take_image();
  out.ops = b.take_ops();
}

// ---------------------------------------------------------------------------
// REACT: motor associative memory. 500 bound state-action pairs superpose
// into one memory vector; recalls unbind a state key and clean up over the
// item codebook.
// ---------------------------------------------------------------------------

struct ReactData {
  Codebook items;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> samples;  // (state, action)
  std::vector<std::uint32_t> recall_sample;
};

ReactData gen_react_data(const WorkloadParams& p) {
  ReactData d{Codebook::random("items", p.react_items, p.dim, p.fold_width,
                               derive_seed(p.seed, 401)),
              {},
              {}};
  Rng rng(derive_seed(p.seed, 402));
  for (std::uint32_t s = 0; s < p.react_samples; ++s)
    d.samples.emplace_back(static_cast<std::uint32_t>(rng.next_below(p.react_items)),
                           static_cast<std::uint32_t>(rng.next_below(p.react_items)));
  for (std::uint32_t r = 0; r < p.react_recalls; ++r)
    d.recall_sample.push_back(static_cast<std::uint32_t>(rng.next_below(p.react_samples)));
  return d;
}

void build_react(const AccConfig& cfg, const WorkloadParams& p, BuiltWorkload& out) {
  const ReactData d = gen_react_data(p);
  const Precision prec{static_cast<int>(cfg.bnd_bits), static_cast<int>(cfg.distance_bits)};
  const std::uint32_t l = p.folds();

  // oracle: H-saturating superposition of bound pairs
  Accumulator acc(p.dim, p.fold_width, prec.h_bits);
  for (const auto& [st, ac] : d.samples)
    acc = accumulate(std::move(acc), bind(d.items.item(st), d.items.item(ac)), 1);
  const Hypervector memory = sign(acc);
  std::vector<Hypervector> item_vecs;
  for (std::uint32_t i = 0; i < p.react_items; ++i) item_vecs.push_back(d.items.item(i));
  for (auto rs : d.recall_sample) {
    auto probe = unbind(memory, d.items.item(d.samples[rs].first));
    out.expected.push_back(
        static_cast<std::uint32_t>(nn_search(item_vecs, probe, prec.c_bits)));
    out.query_vectors.push_back(std::move(probe));
  }

  ProgramBuilder b(cfg);
  b.set_folds(l);
  b.add_region(seeds_region("items", d.items, Placement::kReplicated));
  b.add_region(seeds_region("scan_items", d.items, Placement::kDistributed));
  b.add_region(scratch_region("mem", Placement::kReplicated, 1, l));
  b.add_region(scratch_region("qbuf", Placement::kReplicated, 1, l));

  // memory build: samples ascending per fold, chunked by the BND registers
  for (const auto& [c0, c1] : fold_chunks(cfg, l)) {
    for (std::uint32_t s = 0; s < p.react_samples; ++s) {
      auto st = b.open_stream("items", d.samples[s].first, 0);
      auto ac = b.open_stream("items", d.samples[s].second, 1);
      bool ride_st = b.position(st, c0);
      bool ride_ac = b.position(ac, c0);
      for (std::uint32_t k = c0; k < c1; ++k) {
        b.emit(isa::rf_to_bb(0, k == c0 ? ride_st : true, true));
        b.emit(isa::rf_cvt_acc(1, k == c0 ? ride_ac : true,
                               static_cast<std::uint8_t>(k - c0), s == 0, true));
      }
    }
    for (std::uint32_t k = c0; k < c1; ++k)
      b.store_sign("mem", 0, k, static_cast<std::uint8_t>(k - c0));
  }

  // recalls: probe = memory unbound by the state key, then clean-up scan
  for (auto rs : d.recall_sample) {
    auto key = b.open_stream("items", d.samples[rs].first, 0);
    for (std::uint32_t k = 0; k < l; ++k) {
      b.emit(isa::mem_to_bb(b.slot_of("mem", 0, k), true));
      const bool ride = b.position(key, k);
      b.emit(isa::rf_to_bb(0, ride, false));
      b.store_bb("qbuf", 0, k);
    }
    b.load_query("qbuf", 0);
    b.scan_region("scan_items");
  }

  out.codebooks.push_back(d.items);
  out.image = b.take_image();
  out.ops = b.take_ops();
}

}  // namespace

bool is_workload_name(const std::string& name) {
  return name == "mult" || name == "tree" || name == "fact" || name == "react";
}

BuiltWorkload build_workload(const AccConfig& cfg, const WorkloadParams& params) {
  if (params.dim == 0 || params.fold_width == 0 || params.dim % params.fold_width != 0)
    throw ConfigError("workload: dim must be a positive multiple of fold_width");
  if (params.fold_width != cfg.fold_width)
    throw ConfigError("workload fold width must match the datapath width");
  if (params.folds() > 8) throw ConfigError("workload: more than 8 folds unsupported");

  BuiltWorkload out;
  out.params = params;
  if (params.name == "mult")
    build_mult(cfg, params, out);
  else if (params.name == "tree")
    build_tree(cfg, params, out);
  else if (params.name == "fact")
    build_fact(cfg, params, out);
  else if (params.name == "react")
    build_react(cfg, params, out);
  else
    throw ConfigError("unknown workload: " + params.name);
  return out;
}

}  // namespace vsaforge::wl
