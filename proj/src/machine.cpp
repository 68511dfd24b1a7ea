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

#include "vsaforge/machine.hpp"

#include <algorithm>
#include <ostream>

#include "vsaforge/codebook.hpp"
#include "vsaforge/errors.hpp"
#include "vsaforge/ops.hpp"

namespace vsaforge::sim {

using isa::op::kBindLd;
using isa::op::kBindXor;
using isa::op::kBndAcc;
using isa::op::kBndAccT;
using isa::op::kBndSet;
using isa::op::kBndSetT;
using isa::op::kBndTgt;
using isa::op::kDcAfin;
using isa::op::kDcAmax;
using isa::op::kDcDacc;
using isa::op::kDcDset;
using isa::op::kDcSt;
using isa::op::kDcSto;
using isa::op::kGenLoad;
using isa::op::kGenLoadf;
using isa::op::kGenLoadn;
using isa::op::kGenRead;
using isa::op::kGenShf;
using isa::op::kGenStep;
using isa::op::kMemLdq;
using isa::op::kMemLdqb;
using isa::op::kMemRd;
using isa::op::kMemRdb;
using isa::op::kMultCvt;
using isa::op::kMultMuld;
using isa::op::kMultMuli;
using isa::op::kSgnPassb;
using isa::op::kSgnPop;
using isa::op::kSgnSgn;

const RegionLayout& ImageLayout::at(const std::string& name) const {
  const auto it = regions.find(name);
  if (it == regions.end()) throw ConfigError("unknown region: " + name);
  return it->second;
}

ImageLayout compute_layout(const AccConfig& cfg, const LoadImage& image) {
  ImageLayout out;
  const std::uint32_t a = cfg.active_tiles();
  std::uint32_t base = 0;
  for (const auto& r : image.regions) {
    if (out.regions.count(r.name)) throw ConfigError("duplicate region: " + r.name);
    if (r.vec_folds == 0) throw ConfigError("region with zero folds per vector");
    if (!r.data.empty() && r.data.size() % r.vec_folds != 0)
      throw ConfigError("region data not a multiple of vec_folds");
    RegionLayout lay;
    lay.placement = r.placement;
    lay.base = base;
    lay.vec_folds = r.vec_folds;
    lay.vectors = r.num_vectors();
    switch (r.placement) {
      case Placement::kReplicated:
        lay.stride = r.vec_folds;
        lay.height = lay.vectors * r.vec_folds;
        break;
      case Placement::kDistributed:
        lay.stride = r.vec_folds;
        lay.height = ((lay.vectors + a - 1) / a) * r.vec_folds;
        break;
      case Placement::kStriped:
        lay.stride = (r.vec_folds + a - 1) / a;
        lay.height = lay.vectors * lay.stride;
        break;
    }
    base += lay.height;
    out.regions.emplace(r.name, lay);
  }
  out.total_height = base;
  if (base > cfg.sram_slots_per_tile())
    throw ConfigError("image needs " + std::to_string(base) + " fold slots per tile, " +
                      std::to_string(cfg.sram_slots_per_tile()) + " available");
  return out;
}

Machine Machine::load(const AccConfig& cfg, isa::Program program, LoadImage image) {
  cfg.validate();
  const auto errs = isa::validate(program, cfg);
  if (!errs.empty())
    throw ConfigError("program validation failed: " + errs.front() +
                      (errs.size() > 1 ? " (+" + std::to_string(errs.size() - 1) + " more)"
                                       : ""));
  Machine m;
  m.cfg_ = cfg;
  m.layout_ = compute_layout(cfg, image);
  m.active_ids_ = cfg.active_tile_ids();
  m.program_ = std::move(program);

  const std::uint32_t slots = cfg.sram_slots_per_tile();
  m.tiles_.resize(cfg.tiles);
  for (auto& t : m.tiles_) {
    t.sram.assign(slots, Fold(cfg.fold_width));
    t.sram_valid.assign(slots, 0);
    t.ca90_rf.assign(cfg.ca90_rf_regs, Fold(cfg.fold_width));
    t.rf_valid.assign(cfg.ca90_rf_regs, 0);
    for (auto& q : t.qry) q = Fold(cfg.fold_width);
    t.bind_buf = Fold(cfg.fold_width);
    t.bnd_rf.assign(cfg.bnd_rf_regs, std::vector<std::int32_t>(cfg.fold_width, 0));
    t.dsum.assign(cfg.dsum_regs, 0);
    t.dsum_valid.assign(cfg.dsum_regs, 0);
  }

  const std::uint32_t a = static_cast<std::uint32_t>(m.active_ids_.size());
  for (const auto& r : image.regions) {
    const auto& lay = m.layout_.at(r.name);
    const std::uint32_t vecs =
        r.data.empty() ? 0 : static_cast<std::uint32_t>(r.data.size() / r.vec_folds);
    for (std::uint32_t v = 0; v < vecs; ++v) {
      for (std::uint32_t k = 0; k < r.vec_folds; ++k) {
        const Fold& f = r.data[std::size_t{v} * r.vec_folds + k];
        if (f.width() != cfg.fold_width)
          throw ConfigError("region " + r.name + ": fold width mismatch");
        switch (r.placement) {
          case Placement::kReplicated:
            for (auto t : m.active_ids_) {
              m.tiles_[t].sram[lay.base + v * lay.stride + k] = f;
              m.tiles_[t].sram_valid[lay.base + v * lay.stride + k] = 1;
            }
            break;
          case Placement::kDistributed: {
            const auto t = m.active_ids_[v % a];
            const auto slot = lay.base + (v / a) * lay.stride + k;
            m.tiles_[t].sram[slot] = f;
            m.tiles_[t].sram_valid[slot] = 1;
            break;
          }
          case Placement::kStriped: {
            const auto t = m.active_ids_[k % a];
            const auto slot = lay.base + v * lay.stride + k / a;
            m.tiles_[t].sram[slot] = f;
            m.tiles_[t].sram_valid[slot] = 1;
            break;
          }
        }
      }
    }
  }
  return m;
}

std::uint32_t Machine::active_pos(std::uint32_t tile) const {
  for (std::uint32_t i = 0; i < active_ids_.size(); ++i)
    if (active_ids_[i] == tile) return i;
  return 0;
}

void Machine::exec_stage(InFlight& fl, isa::StageId stage, std::uint8_t code,
                         CycleTrace& trace) {
  const auto& op = program_.ops[fl.op_index];
  const std::uint32_t w = cfg_.fold_width;
  const int h_bits = static_cast<int>(cfg_.bnd_bits);
  const int c_bits = static_cast<int>(cfg_.distance_bits);
  const std::int32_t wmax = static_cast<std::int32_t>((1 << (h_bits - 1)) - 1);

  // Broadcast reads resolve the owner's value once, then fan out.
  switch (stage) {
    case isa::StageId::kMem: {
      if (code == kMemRd || code == kMemLdq) {
        for (auto t : active_ids_) {
          auto& tile = tiles_[t];
          if (!tile.sram_valid[op.slot]) {
            fl.active[t] = 0;
            continue;
          }
          if (code == kMemRd)
            fl.tokens[t].fold = tile.sram[op.slot];
          else
            tile.qry[op.qreg] = tile.sram[op.slot];
        }
      } else {  // RDB / LDQB: owner reads, value broadcast to every tile
        const std::uint32_t owner = active_ids_[op.owner % active_ids_.size()];
        const auto& src = tiles_[owner];
        if (!src.sram_valid[op.slot]) {
          for (auto t : active_ids_) fl.active[t] = 0;
        } else {
          for (auto t : active_ids_) {
            if (code == kMemRdb)
              fl.tokens[t].fold = src.sram[op.slot];
            else
              tiles_[t].qry[op.qreg] = src.sram[op.slot];
          }
        }
      }
      break;
    }
    case isa::StageId::kGen: {
      for (auto t : active_ids_) {
        if (!fl.active[t]) continue;
        auto& tile = tiles_[t];
        auto& tok = fl.tokens[t];
        switch (code) {
          case kGenLoad:
            tile.ca90_rf[op.rf] = tok.fold;
            tile.rf_valid[op.rf] = 1;
            break;
          case kGenLoadf:
            tile.ca90_rf[op.rf] = ca90_pow(tok.fold, op.exp + active_pos(t));
            tile.rf_valid[op.rf] = 1;
            tok.fold = tile.ca90_rf[op.rf];
            break;
          case kGenLoadn:
            tile.ca90_rf[op.rf] = ca90_pow(tok.fold, op.exp);
            tile.rf_valid[op.rf] = 1;
            tok.fold = tile.ca90_rf[op.rf];
            break;
          case kGenStep:
            if (!tile.rf_valid[op.rf]) {
              fl.active[t] = 0;
              break;
            }
            tile.ca90_rf[op.rf] = ca90_step(tile.ca90_rf[op.rf]);
            tok.fold = tile.ca90_rf[op.rf];
            break;
          case kGenRead:
            if (!tile.rf_valid[op.rf]) {
              fl.active[t] = 0;
              break;
            }
            tok.fold = tile.ca90_rf[op.rf];
            break;
          case kGenShf: {
            if (!tile.rf_valid[op.rf] || !tile.rf_valid[op.rf2]) {
              fl.active[t] = 0;
              break;
            }
            const auto j = static_cast<std::uint32_t>(static_cast<std::uint8_t>(op.imm));
            // funnel: low part from RF[rf], wrapped-in high part from RF[rf2]
            tok.fold = tile.ca90_rf[op.rf].shift_down(j) ^
                       tile.ca90_rf[op.rf2].shift_up(w - j);
            break;
          }
          default:
            break;
        }
      }
      break;
    }
    case isa::StageId::kBind: {
      for (auto t : active_ids_) {
        if (!fl.active[t]) continue;
        auto& tile = tiles_[t];
        auto& tok = fl.tokens[t];
        if (code == kBindLd) {
          tile.bind_buf = tok.fold;
        } else {  // XOR
          tile.bind_buf = tile.bind_buf ^ tok.fold;
          tok.fold = tile.bind_buf;
        }
      }
      break;
    }
    case isa::StageId::kMult: {
      for (auto t : active_ids_) {
        if (!fl.active[t]) continue;
        auto& tok = fl.tokens[t];
        std::int32_t scale = 1;
        if (code == kMultMuli) {
          scale = op.imm;
        } else if (code == kMultMuld) {
          const std::uint32_t owner = active_ids_[op.owner % active_ids_.size()];
          const int shift = multiplier_shift(c_bits, h_bits);
          auto v = static_cast<std::int32_t>(tiles_[owner].dsum[op.dreg] >> shift);
          scale = std::clamp(v, -wmax, wmax);
        }
        tok.lanes.assign(w, 0);
        for (std::uint32_t i = 0; i < w; ++i)
          tok.lanes[i] = tok.fold.bit(i) ? -scale : scale;
      }
      break;
    }
    case isa::StageId::kBnd: {
      if (code == kBndTgt) {
        bnd_target_ = op.bnd;
        break;
      }
      const bool via_target = (code == kBndSetT || code == kBndAccT);
      const bool is_set = (code == kBndSet || code == kBndSetT);
      const std::uint8_t reg = via_target ? bnd_target_ : op.bnd;
      for (auto t : active_ids_) {
        if (!fl.active[t]) continue;
        auto& lanes = tiles_[t].bnd_rf[reg];
        const auto& tok = fl.tokens[t];
        if (is_set) {
          for (std::uint32_t i = 0; i < w; ++i)
            lanes[i] = static_cast<std::int32_t>(saturate(tok.lanes[i], h_bits));
        } else {
          for (std::uint32_t i = 0; i < w; ++i)
            lanes[i] = static_cast<std::int32_t>(
                saturate(std::int64_t{lanes[i]} + tok.lanes[i], h_bits));
        }
      }
      break;
    }
    case isa::StageId::kSgnPop: {
      for (auto t : active_ids_) {
        if (!fl.active[t]) continue;
        auto& tile = tiles_[t];
        auto& tok = fl.tokens[t];
        if (code == kSgnSgn) {
          Fold f(w);
          for (std::uint32_t i = 0; i < w; ++i)
            if (tile.bnd_rf[op.bnd][i] < 0) f.set_bit(i, true);
          tok.fold = std::move(f);
        } else if (code == kSgnPop) {
          tok.score = fold_pop_diff(tok.fold, tile.qry[op.qreg]);
        } else {  // PASSB
          tok.fold = tile.bind_buf;
        }
      }
      break;
    }
    case isa::StageId::kDc: {
      switch (code) {
        case kDcDset:
          for (auto t : active_ids_) {
            auto& tile = tiles_[t];
            if (!fl.active[t]) {
              tile.dsum_valid[op.dreg] = 0;  // stale slots must not reach ARGMAX
              continue;
            }
            const auto sat = saturate(fl.tokens[t].score, c_bits);
            if (sat != fl.tokens[t].score) dsum_saturated_ = true;
            tile.dsum[op.dreg] = sat;
            tile.dsum_valid[op.dreg] = 1;
          }
          break;
        case kDcDacc:
          for (auto t : active_ids_) {
            if (!fl.active[t]) continue;
            auto& tile = tiles_[t];
            const auto raw = tile.dsum[op.dreg] + fl.tokens[t].score;
            const auto sat = saturate(raw, c_bits);
            if (sat != raw) dsum_saturated_ = true;
            tile.dsum[op.dreg] = sat;
          }
          break;
        case kDcAmax: {
          const auto a = static_cast<std::uint32_t>(active_ids_.size());
          for (std::uint32_t pos = 0; pos < a; ++pos) {
            auto& tile = tiles_[active_ids_[pos]];
            if (!tile.dsum_valid[op.dreg]) continue;
            const std::uint32_t g = pos + a * op.slot;
            const std::int64_t v = tile.dsum[op.dreg];
            if (!tile.amax_any || v > tile.amax_best ||
                (v == tile.amax_best && g < tile.amax_index)) {
              tile.amax_any = true;
              tile.amax_best = v;
              tile.amax_index = g;
            }
          }
          break;
        }
        case kDcAfin: {
          // Combinational cross-tile reduction: max value, ties to the lowest
          // global index.
          bool any = false;
          std::int64_t best = 0;
          std::uint32_t best_g = 0;
          for (auto t : active_ids_) {
            auto& tile = tiles_[t];
            if (!tile.amax_any) continue;
            if (!any || tile.amax_best > best ||
                (tile.amax_best == best && tile.amax_index < best_g)) {
              any = true;
              best = tile.amax_best;
              best_g = tile.amax_index;
            }
          }
          results_.push_back(any ? best_g : 0xFFFFFFFFu);
          for (auto t : active_ids_) tiles_[t].amax_any = false;
          break;
        }
        case kDcSt:
          for (auto t : active_ids_) {
            if (!fl.active[t]) continue;
            tiles_[t].sram[op.slot] = fl.tokens[t].fold;
            tiles_[t].sram_valid[op.slot] = 1;
          }
          break;
        case kDcSto: {
          const auto t = active_ids_[op.owner % active_ids_.size()];
          if (fl.active[t]) {
            tiles_[t].sram[op.slot] = fl.tokens[t].fold;
            tiles_[t].sram_valid[op.slot] = 1;
          }
          break;
        }
        default:
          break;
      }
      break;
    }
  }

  // Energy: dynamic weight per tile whose unit switched for this stage op.
  const double unit = cfg_.energy.stage_dynamic[static_cast<int>(stage)];
  if (stage == isa::StageId::kMem && (code == kMemRdb || code == kMemLdqb)) {
    // broadcast reads activate only the owner's SRAM
    const std::uint32_t owner = active_ids_[op.owner % active_ids_.size()];
    energy_total_ += unit;
    trace.energy_delta += unit;
    trace.active.push_back({owner, static_cast<std::uint8_t>(stage), code, unit});
  } else {
    for (auto t : active_ids_) {
      if (!fl.active[t]) continue;
      energy_total_ += unit;
      trace.energy_delta += unit;
      trace.active.push_back({t, static_cast<std::uint8_t>(stage), code, unit});
    }
  }
}

CycleTrace Machine::step() {
  if (finished()) throw Error("step on a finished machine");
  CycleTrace trace;
  trace.cycle = cycle_;

  // Defensive decode of the word actually executing this cycle; malformed
  // words or metadata divergence halt the machine.
  const auto& word = program_.words[cycle_];
  isa::InstructionWord decoded;
  try {
    decoded = isa::decode_word(isa::encode_word(word));
  } catch (const Error& e) {
    faulted_ = true;
    fault_message_ = "decode fault at cycle " + std::to_string(cycle_) + ": " + e.what();
    return trace;
  }

  // Admit newly issuing ops (in-order, at most one per cycle).
  while (next_op_ < program_.ops.size() &&
         program_.issue_cycle[next_op_] == cycle_) {
    InFlight fl;
    fl.op_index = next_op_;
    fl.path_pos = 0;
    fl.tokens.assign(cfg_.tiles, Token{Fold(cfg_.fold_width), {}, 0});
    fl.active.assign(cfg_.tiles, 0);
    for (auto t : active_ids_) fl.active[t] = 1;
    inflight_.push_back(std::move(fl));
    ++next_op_;
  }

  // Execute the in-flight stage ops in pipeline order S1 -> S7.
  std::array<InFlight*, isa::kNumStages> by_stage{};
  std::array<std::uint8_t, isa::kNumStages> expected{};
  for (auto& fl : inflight_) {
    const auto& op = program_.ops[fl.op_index];
    int seen = 0;
    for (int s = 0; s < isa::kNumStages; ++s) {
      if (op.stage_ops[s] == 0) continue;
      if (seen == fl.path_pos) {
        by_stage[s] = &fl;
        expected[s] = op.stage_ops[s];
        break;
      }
      ++seen;
    }
  }
  for (int s = 0; s < isa::kNumStages; ++s) {
    const std::uint8_t from_word = decoded.types[s];
    if (from_word != expected[s]) {
      faulted_ = true;
      fault_message_ = "word/schedule divergence at cycle " + std::to_string(cycle_) +
                       " stage " + std::string(isa::stage_name(static_cast<isa::StageId>(s)));
      return trace;
    }
    if (by_stage[s] != nullptr) {
      exec_stage(*by_stage[s], static_cast<isa::StageId>(s), expected[s], trace);
      by_stage[s]->path_pos++;
      stage_active_cycles_[s]++;
    }
  }

  // Retire completed ops.
  std::erase_if(inflight_, [&](const InFlight& fl) {
    return fl.path_pos >= program_.ops[fl.op_index].path_length();
  });

  const double leak = cfg_.energy.leakage_per_tile * active_ids_.size();
  energy_total_ += leak;
  trace.energy_delta += leak;
  ++cycle_;
  return trace;
}

RunReport Machine::run(std::ostream* trace_os) {
  if (trace_os) *trace_os << kTraceHeader << "\n";
  while (!finished()) {
    const auto tr = step();
    if (trace_os) {
      for (const auto& a : tr.active) {
        *trace_os << tr.cycle << ',' << a.tile << ','
                  << isa::stage_name(static_cast<isa::StageId>(a.stage)) << ','
                  << isa::opcode_name(static_cast<isa::StageId>(a.stage), a.opcode)
                  << ',' << a.energy << "\n";
      }
      *trace_os << tr.cycle << ",ALL,LEAK,,"
                << cfg_.energy.leakage_per_tile * active_ids_.size() << "\n";
    }
  }

  RunReport r;
  r.config_name = cfg_.name;
  r.control_mode = std::string(isa::control_mode_name(program_.mode));
  r.total_cycles = cycle_;
  r.words_executed = cycle_;
  for (int s = 0; s < isa::kNumStages; ++s)
    r.utilization[s] =
        cycle_ == 0 ? 0.0 : static_cast<double>(stage_active_cycles_[s]) / cycle_;
  r.energy_total = energy_total_;
  r.mean_power = cycle_ == 0 ? 0.0 : energy_total_ / static_cast<double>(cycle_);
  r.result_indices = results_;
  r.dsum_saturated = dsum_saturated_;
  r.faulted = faulted_;
  r.fault_message = fault_message_;

  std::uint64_t h = 1469598103934665603ull;
  const auto mix = [&h](std::uint64_t v) {
    h ^= v;
    h *= 1099511628211ull;
  };
  for (auto i : results_) mix(i);
  mix(dsum_saturated_ ? 1 : 0);
  r.results_digest = h;
  return r;
}

void Machine::inject_word(std::size_t index, isa::InstructionWord w) {
  if (index < program_.words.size()) program_.words[index] = w;
}

std::uint64_t Machine::state_digest() const {
  std::uint64_t h = 1469598103934665603ull;
  const auto mix = [&h](std::uint64_t v) {
    h ^= v;
    h *= 1099511628211ull;
  };
  for (const auto& t : tiles_) {
    for (std::size_t s = 0; s < t.sram.size(); ++s) {
      mix(t.sram_valid[s]);
      if (t.sram_valid[s])
        for (auto wd : t.sram[s].words()) mix(wd);
    }
    for (std::size_t r = 0; r < t.ca90_rf.size(); ++r) {
      mix(t.rf_valid[r]);
      if (t.rf_valid[r])
        for (auto wd : t.ca90_rf[r].words()) mix(wd);
    }
    for (const auto& q : t.qry)
      for (auto wd : q.words()) mix(wd);
    for (auto wd : t.bind_buf.words()) mix(wd);
    for (const auto& b : t.bnd_rf)
      for (auto lane : b) mix(static_cast<std::uint64_t>(static_cast<std::int64_t>(lane)));
    for (std::size_t d = 0; d < t.dsum.size(); ++d) {
      mix(t.dsum_valid[d]);
      mix(static_cast<std::uint64_t>(t.dsum[d]));
    }
    mix(t.amax_any);
    mix(t.amax_best);
    mix(t.amax_index);
  }
  for (auto i : results_) mix(i);
  return h;
}

}  // namespace vsaforge::sim
