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

#include "vsaforge/builder.hpp"

#include <algorithm>

#include "vsaforge/errors.hpp"

namespace vsaforge::sim {

using isa::amax;
using isa::afin;
using isa::mem_pop;
using isa::qry_load;
using isa::qry_load_bcast;
using isa::rf_pop;
using isa::seed_to_rf;
using isa::sgn_store;

ProgramBuilder::ProgramBuilder(const AccConfig& cfg) : cfg_(cfg) { cfg_.validate(); }

void ProgramBuilder::add_region(Region r) {
  image_.regions.push_back(std::move(r));
  layout_dirty_ = true;
}

void ProgramBuilder::refresh_layout() {
  if (layout_dirty_) {
    layout_ = compute_layout(cfg_, image_);
    layout_dirty_ = false;
  }
}

const RegionLayout& ProgramBuilder::region(const std::string& name) const {
  const_cast<ProgramBuilder*>(this)->refresh_layout();
  return layout_.at(name);
}

LoadImage ProgramBuilder::take_image() { return std::move(image_); }

std::vector<isa::PrimitiveOp> ProgramBuilder::take_ops() { return std::move(ops_); }

void ProgramBuilder::set_folds(std::uint32_t l) {
  if (l < 1 || l > 8) throw ConfigError("builder: fold count must be 1..8");
  num_folds_ = l;
}

std::uint16_t ProgramBuilder::slot_of(const std::string& name, std::uint32_t v,
                                      std::uint32_t k) const {
  const auto& lay = region(name);
  const std::uint32_t a = cfg_.active_tiles();
  std::uint32_t slot = 0;
  switch (lay.placement) {
    case Placement::kReplicated:
      slot = lay.base + v * lay.stride + k;
      break;
    case Placement::kDistributed:
      slot = lay.base + (v / a) * lay.stride + k;
      break;
    case Placement::kStriped:
      slot = lay.base + v * lay.stride + k / a;
      break;
  }
  if (slot >= cfg_.sram_slots_per_tile()) throw ConfigError("slot overflow in " + name);
  return static_cast<std::uint16_t>(slot);
}

std::uint8_t ProgramBuilder::owner_of(const std::string& name, std::uint32_t v) const {
  if (region(name).placement != Placement::kDistributed)
    throw ConfigError("owner_of needs a distributed region");
  return static_cast<std::uint8_t>(v % cfg_.active_tiles());
}

std::uint8_t ProgramBuilder::owner_of_fold(const std::string& name, std::uint32_t v,
                                           std::uint32_t k) const {
  (void)v;
  if (region(name).placement != Placement::kStriped)
    throw ConfigError("owner_of_fold needs a striped region");
  return static_cast<std::uint8_t>(k % cfg_.active_tiles());
}

ProgramBuilder::Stream ProgramBuilder::open_stream(const std::string& seed_region,
                                                   std::uint32_t item, std::uint8_t rf) {
  Stream s;
  s.seed_slot = slot_of(seed_region, item, 0);
  s.rf = rf;
  s.fold = -1;
  return s;
}

bool ProgramBuilder::position(Stream& s, std::uint32_t k) {
  const auto target = static_cast<std::int32_t>(k);
  if (s.fold >= 0 && s.fold == target) return false;  // consume with READ
  if (s.fold >= 0 && s.fold == target - 1) {
    s.fold = target;  // the consuming op steps
    return true;
  }
  // the multi-step generator jumps straight to the wanted fold
  emit(isa::seed_to_rf_n(s.seed_slot, s.rf, static_cast<std::uint8_t>(k)));
  s.fold = target;
  return false;
}

void ProgramBuilder::load_query(const std::string& name, std::uint32_t v) {
  const auto& lay = region(name);
  for (std::uint32_t k = 0; k < num_folds_; ++k) {
    const auto slot = slot_of(name, v, k);
    if (lay.placement == Placement::kStriped)
      emit(qry_load_bcast(slot, static_cast<std::uint8_t>(k), owner_of_fold(name, v, k)));
    else if (lay.placement == Placement::kDistributed)
      emit(qry_load_bcast(slot, static_cast<std::uint8_t>(k), owner_of(name, v)));
    else
      emit(qry_load(slot, static_cast<std::uint8_t>(k)));
  }
}

void ProgramBuilder::scan_region(const std::string& name, bool append_result) {
  const auto& lay = region(name);
  if (lay.placement != Placement::kDistributed)
    throw ConfigError("scan_region requires a distributed region");
  const std::uint32_t a = cfg_.active_tiles();
  const std::uint32_t local = (lay.vectors + a - 1) / a;  // local vector slots
  const bool from_seeds = lay.vec_folds == 1 && num_folds_ > 1;
  const std::uint32_t batch =
      from_seeds ? std::min(cfg_.ca90_rf_regs, cfg_.dsum_regs) : cfg_.dsum_regs;

  for (std::uint32_t s0 = 0; s0 < local; s0 += batch) {
    const std::uint32_t bl = std::min(batch, local - s0);
    for (std::uint32_t k = 0; k < num_folds_; ++k) {
      for (std::uint32_t i = 0; i < bl; ++i) {
        const std::uint32_t s = s0 + i;
        const auto q = static_cast<std::uint8_t>(k);
        const auto d = static_cast<std::uint8_t>(i);
        if (from_seeds) {
          if (k == 0) {
            emit(isa::seed_pop(static_cast<std::uint16_t>(lay.base + s),
                               static_cast<std::uint8_t>(i), d, true));
          } else {
            emit(rf_pop(static_cast<std::uint8_t>(i), true, q, d, false));
          }
        } else {
          emit(mem_pop(slot_of(name, s * a, k), q, d, k == 0));
        }
      }
    }
    for (std::uint32_t i = 0; i < bl; ++i)
      emit(amax(static_cast<std::uint16_t>(s0 + i), static_cast<std::uint8_t>(i)));
  }
  if (append_result) emit(afin());
}

void ProgramBuilder::store_sign(const std::string& name, std::uint32_t v,
                                std::uint32_t k, std::uint8_t bnd) {
  emit(sgn_store(bnd, slot_of(name, v, k)));
}

void ProgramBuilder::store_bb(const std::string& name, std::uint32_t v,
                              std::uint32_t k) {
  emit(isa::bb_store(slot_of(name, v, k)));
}

}  // namespace vsaforge::sim

namespace vsaforge::sim {

std::size_t distance_pipeline(const AccConfig& cfg,
                              const std::vector<Hypervector>& items,
                              const Hypervector& query, RunReport* report_out) {
  if (items.empty()) throw ConfigError("distance_pipeline: no items");
  const std::uint32_t w = cfg.fold_width;
  if (query.fold_width() != w)
    throw DimensionError("distance_pipeline: query fold width != datapath width");
  const std::uint32_t l = query.num_folds();

  ProgramBuilder b(cfg);
  b.set_folds(l);

  Region store;
  store.name = "items";
  store.placement = Placement::kDistributed;
  store.vec_folds = l;
  for (const auto& v : items) {
    if (v.dim() != query.dim() || v.fold_width() != w)
      throw DimensionError("distance_pipeline: item dimensions mismatch");
    for (std::uint32_t k = 0; k < l; ++k) store.data.push_back(v.fold(k));
  }
  b.add_region(std::move(store));

  Region q;
  q.name = "query";
  q.placement = Placement::kReplicated;
  q.vec_folds = l;
  for (std::uint32_t k = 0; k < l; ++k) q.data.push_back(query.fold(k));
  b.add_region(std::move(q));

  b.load_query("query", 0);
  b.scan_region("items");

  auto image = b.take_image();
  auto ops = b.take_ops();
  auto program = isa::schedule_mopc(ops, cfg);
  auto machine = Machine::load(cfg, std::move(program), std::move(image));
  auto report = machine.run();
  if (report.faulted) throw Error("distance_pipeline faulted: " + report.fault_message);
  if (report.result_indices.size() != 1)
    throw Error("distance_pipeline produced no result");
  if (report_out) *report_out = report;
  return report.result_indices[0];
}

}  // namespace vsaforge::sim
