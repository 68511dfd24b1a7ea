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
#include <vector>

#include "vsaforge/isa.hpp"

namespace vsaforge::isa {

// A primitive op is one fold's worth of work flowing through a short stage
// path: its stage opcodes execute on consecutive cycles, carrying a per-tile
// token (fold, integer lanes, score) forward. Operands are bound from the
// 16-bit parameter of the word in which the primitive issues; primitives
// needing distinct parameters therefore issue in distinct words.
enum class OpKind : std::uint8_t {
  kSeedToRf,   // MEM RD -> GEN LOAD/LOADF/LOADN: stage a seed fold into the RF
  kSeedPop,    // MEM RD -> GEN LOAD -> SGN POP (QRY[0]) -> DC: fused fold-0 scan
  kRfPop,      // GEN STEP/READ -> SGN POP -> DC DSET/DACC: CA-stream distance
  kMemPop,     // MEM RD -> SGN POP -> DC DSET/DACC: stored-vector distance
  kQryLoad,    // MEM LDQ/LDQB: load one query fold
  kMemToBb,    // MEM RD/RDB/RDF -> BIND LD/XOR: memory fold into bind chain
  kRfToBb,     // GEN STEP/READ -> BIND LD/XOR: CA fold into bind chain
  kShfBind,    // GEN SHF -> BIND LD/XOR: funnel-shifted (permuted) fold
  kRfVopAcc,   // GEN STEP/READ [-> BIND XOR] -> MULT -> BND: accumulate
  kMemVopAcc,  // MEM RD/RDB/RDF [-> BIND XOR] -> MULT CVT -> BND
  kBbStore,    // SGN PASSB -> DC ST/STF: spill the bind buffer
  kSgnStore,   // SGN SGN -> DC ST/STF: quantize a BND register and store
  kBndTarget,  // BND TGT: select the implicit accumulate target
  kRfStep,     // GEN STEP alone: advance a CA stream without consuming it
  kAmax,       // DC AMAX: argmax update from DSUM[d] for local vector slot
  kAfin,       // DC AFIN: cross-tile argmax merge, result push, state reset
};

struct PrimitiveOp {
  OpKind kind{};
  std::array<std::uint8_t, kNumStages> stage_ops{};  // 0 = stage unused

  // Decoded operand fields; which ones apply depends on the kind.
  std::uint16_t slot = 0;   // sram slot or region-local vector index (10 bits)
  std::uint8_t rf = 0;      // CA-90 RF index
  std::uint8_t rf2 = 0;     // second RF index (funnel shift)
  std::uint8_t qreg = 0;    // QRY fold register
  std::uint8_t dreg = 0;    // DSUM register
  std::uint8_t bnd = 0;     // BND RF register
  std::uint8_t owner = 0;   // owning tile for broadcast reads
  std::uint8_t exp = 0;     // CA-90 exponent base for LOADF
  std::int8_t imm = 0;      // scalar immediate for MULI, 0..255 shift for SHF

  int first_stage() const;
  int last_stage() const;
  int path_length() const;
  bool active(StageId s) const { return stage_ops[static_cast<int>(s)] != 0; }

  /// Packs the operand fields into the 16-bit word parameter. The layout is a
  /// deterministic function of the kind.
  std::uint16_t pack_param() const;
  /// Rebinds operand fields from a parameter value.
  void unpack_param(std::uint16_t param);

  friend bool operator==(const PrimitiveOp&, const PrimitiveOp&) = default;
};

// -- construction helpers (the workload program builders use these) ----------

PrimitiveOp seed_to_rf(std::uint16_t slot, std::uint8_t rf);
PrimitiveOp seed_to_rf_striped(std::uint16_t slot, std::uint8_t rf, std::uint8_t exp);
/// Loads a seed and advances it n CA steps in one pass (uniform across tiles).
PrimitiveOp seed_to_rf_n(std::uint16_t slot, std::uint8_t rf, std::uint8_t n);
/// Fused fold-0 distance op: read seed, stage it, popcount against QRY[0].
PrimitiveOp seed_pop(std::uint16_t slot, std::uint8_t rf, std::uint8_t dreg,
                     bool first_fold);
PrimitiveOp rf_pop(std::uint8_t rf, bool step, std::uint8_t qreg, std::uint8_t dreg,
                   bool first_fold);
PrimitiveOp mem_pop(std::uint16_t slot, std::uint8_t qreg, std::uint8_t dreg,
                    bool first_fold);
PrimitiveOp qry_load(std::uint16_t slot, std::uint8_t qreg);
PrimitiveOp qry_load_bcast(std::uint16_t slot, std::uint8_t qreg, std::uint8_t owner);
PrimitiveOp mem_to_bb(std::uint16_t slot, bool first);  // RD
PrimitiveOp mem_to_bb_bcast(std::uint16_t slot, std::uint8_t owner, bool first);
PrimitiveOp rf_to_bb(std::uint8_t rf, bool step, bool first);
PrimitiveOp shf_bind(std::uint8_t ra, std::uint8_t rb, std::uint8_t j, bool first);
/// CVT accumulate from the CA RF; with_bind routes through the BIND XOR first.
PrimitiveOp rf_cvt_acc(std::uint8_t rf, bool step, std::uint8_t bnd, bool set,
                       bool with_bind);
PrimitiveOp rf_muli_acc(std::uint8_t rf, bool step, std::uint8_t bnd, bool set,
                        std::int8_t imm);
/// MULD writes through the implicit BND target (select it with bnd_target).
PrimitiveOp rf_muld_acct(std::uint8_t rf, bool step, std::uint8_t dreg,
                         std::uint8_t owner, bool set);
PrimitiveOp rf_step(std::uint8_t rf);
PrimitiveOp mem_cvt_acc(std::uint16_t slot, std::uint8_t bnd, bool set);
PrimitiveOp mem_cvt_acc_bcast(std::uint16_t slot, std::uint8_t owner, std::uint8_t bnd,
                              bool set);
PrimitiveOp bb_store(std::uint16_t slot);
PrimitiveOp bb_store_owned(std::uint16_t slot, std::uint8_t owner);
PrimitiveOp sgn_store(std::uint8_t bnd, std::uint16_t slot);
PrimitiveOp sgn_store_owned(std::uint8_t bnd, std::uint16_t slot, std::uint8_t owner);
PrimitiveOp bnd_target(std::uint8_t bnd);
PrimitiveOp amax(std::uint16_t vec_slot, std::uint8_t dreg);
PrimitiveOp afin();

}  // namespace vsaforge::isa
