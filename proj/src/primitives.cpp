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

#include "vsaforge/primitives.hpp"

#include "vsaforge/errors.hpp"

namespace vsaforge::isa {

namespace {

constexpr int idx(StageId s) { return static_cast<int>(s); }

// Parameter layouts:
//   A (slot-bearing kinds):  [0,10) slot, [10,13) fieldA, [13,16) fieldB
//   B (register-only kinds): [0,4) regX, [4,8) regY, [8,12) regZ
//   C (immediate kinds):     [0,8) imm, [8,12) regX, [12,16) regY
enum class Layout { kA, kB, kC };

Layout layout_of(OpKind k) {
  switch (k) {
    case OpKind::kSeedToRf:
    case OpKind::kSeedPop:
    case OpKind::kMemPop:
    case OpKind::kQryLoad:
    case OpKind::kMemToBb:
    case OpKind::kMemVopAcc:
    case OpKind::kBbStore:
    case OpKind::kSgnStore:
    case OpKind::kAmax:
      return Layout::kA;
    case OpKind::kShfBind:
      return Layout::kC;
    case OpKind::kRfVopAcc:
      return Layout::kB;  // overridden to kC for the MULI variant below
    default:
      return Layout::kB;
  }
}

}  // namespace

int PrimitiveOp::first_stage() const {
  for (int s = 0; s < kNumStages; ++s)
    if (stage_ops[s] != 0) return s;
  return -1;
}

int PrimitiveOp::last_stage() const {
  for (int s = kNumStages - 1; s >= 0; --s)
    if (stage_ops[s] != 0) return s;
  return -1;
}

int PrimitiveOp::path_length() const {
  int n = 0;
  for (auto c : stage_ops) n += c != 0;
  return n;
}

std::uint16_t PrimitiveOp::pack_param() const {
  Layout layout = layout_of(kind);
  if (kind == OpKind::kRfVopAcc && stage_ops[idx(StageId::kMult)] == op::kMultMuli)
    layout = Layout::kC;
  switch (layout) {
    case Layout::kA: {
      std::uint8_t a = 0, b = 0;
      switch (kind) {
        case OpKind::kSeedToRf: a = rf; b = exp; break;
        case OpKind::kSeedPop:  a = rf; b = dreg; break;
        case OpKind::kMemPop:   a = qreg; b = dreg; break;
        case OpKind::kQryLoad:  a = qreg; b = owner; break;
        case OpKind::kMemToBb:  a = owner; break;
        case OpKind::kMemVopAcc: a = owner; b = bnd; break;
        case OpKind::kBbStore:  b = owner; break;
        case OpKind::kSgnStore: a = bnd; b = owner; break;
        case OpKind::kAmax:     a = dreg; break;
        default: break;
      }
      return static_cast<std::uint16_t>((slot & 0x3FF) | (std::uint16_t{a} << 10) |
                                        (std::uint16_t{b} << 13));
    }
    case Layout::kB: {
      std::uint8_t x = 0, y = 0, z = 0;
      switch (kind) {
        case OpKind::kRfPop:     x = rf; y = qreg; z = dreg; break;
        case OpKind::kRfToBb:    x = rf; break;
        case OpKind::kRfStep:    x = rf; break;
        case OpKind::kRfVopAcc:
          if (stage_ops[idx(StageId::kMult)] == op::kMultMuld) {
            x = rf; y = dreg; z = owner;
          } else {
            x = rf; y = bnd;
          }
          break;
        case OpKind::kBndTarget: x = bnd; break;
        case OpKind::kAfin:      break;
        default: break;
      }
      return static_cast<std::uint16_t>(x | (std::uint16_t{y} << 4) |
                                        (std::uint16_t{z} << 8));
    }
    case Layout::kC: {
      const auto i8 = static_cast<std::uint8_t>(imm);
      std::uint8_t x = 0, y = 0;
      if (kind == OpKind::kShfBind) {
        x = rf;
        y = rf2;
      } else {  // MULI
        x = rf;
        y = bnd;
      }
      return static_cast<std::uint16_t>(i8 | (std::uint16_t{x} << 8) |
                                        (std::uint16_t{y} << 12));
    }
  }
  return 0;
}

void PrimitiveOp::unpack_param(std::uint16_t param) {
  Layout layout = layout_of(kind);
  if (kind == OpKind::kRfVopAcc && stage_ops[idx(StageId::kMult)] == op::kMultMuli)
    layout = Layout::kC;
  switch (layout) {
    case Layout::kA: {
      slot = param & 0x3FF;
      const auto a = static_cast<std::uint8_t>((param >> 10) & 0x7);
      const auto b = static_cast<std::uint8_t>((param >> 13) & 0x7);
      switch (kind) {
        case OpKind::kSeedToRf: rf = a; exp = b; break;
        case OpKind::kSeedPop:  rf = a; dreg = b; break;
        case OpKind::kMemPop:   qreg = a; dreg = b; break;
        case OpKind::kQryLoad:  qreg = a; owner = b; break;
        case OpKind::kMemToBb:  owner = a; break;
        case OpKind::kMemVopAcc: owner = a; bnd = b; break;
        case OpKind::kBbStore:  owner = b; break;
        case OpKind::kSgnStore: bnd = a; owner = b; break;
        case OpKind::kAmax:     dreg = a; break;
        default: break;
      }
      break;
    }
    case Layout::kB: {
      const auto x = static_cast<std::uint8_t>(param & 0xF);
      const auto y = static_cast<std::uint8_t>((param >> 4) & 0xF);
      const auto z = static_cast<std::uint8_t>((param >> 8) & 0xF);
      switch (kind) {
        case OpKind::kRfPop:     rf = x; qreg = y; dreg = z; break;
        case OpKind::kRfToBb:    rf = x; break;
        case OpKind::kRfStep:    rf = x; break;
        case OpKind::kRfVopAcc:
          if (stage_ops[idx(StageId::kMult)] == op::kMultMuld) {
            rf = x; dreg = y; owner = z;
          } else {
            rf = x; bnd = y;
          }
          break;
        case OpKind::kBndTarget: bnd = x; break;
        default: break;
      }
      break;
    }
    case Layout::kC: {
      imm = static_cast<std::int8_t>(param & 0xFF);
      const auto x = static_cast<std::uint8_t>((param >> 8) & 0xF);
      const auto y = static_cast<std::uint8_t>((param >> 12) & 0xF);
      if (kind == OpKind::kShfBind) {
        rf = x;
        rf2 = y;
      } else {
        rf = x;
        bnd = y;
      }
      break;
    }
  }
}

namespace {

PrimitiveOp base(OpKind k) {
  PrimitiveOp p;
  p.kind = k;
  return p;
}

}  // namespace

PrimitiveOp seed_to_rf(std::uint16_t slot, std::uint8_t rf) {
  auto p = base(OpKind::kSeedToRf);
  p.stage_ops[idx(StageId::kMem)] = op::kMemRd;
  p.stage_ops[idx(StageId::kGen)] = op::kGenLoad;
  p.slot = slot;
  p.rf = rf;
  return p;
}

PrimitiveOp seed_to_rf_striped(std::uint16_t slot, std::uint8_t rf, std::uint8_t exp) {
  auto p = base(OpKind::kSeedToRf);
  p.stage_ops[idx(StageId::kMem)] = op::kMemRd;
  p.stage_ops[idx(StageId::kGen)] = op::kGenLoadf;
  p.slot = slot;
  p.rf = rf;
  p.exp = exp;
  return p;
}

PrimitiveOp seed_to_rf_n(std::uint16_t slot, std::uint8_t rf, std::uint8_t n) {
  auto p = base(OpKind::kSeedToRf);
  p.stage_ops[idx(StageId::kMem)] = op::kMemRd;
  p.stage_ops[idx(StageId::kGen)] = op::kGenLoadn;
  p.slot = slot;
  p.rf = rf;
  p.exp = n;
  return p;
}

PrimitiveOp seed_pop(std::uint16_t slot, std::uint8_t rf, std::uint8_t dreg,
                     bool first_fold) {
  auto p = base(OpKind::kSeedPop);
  p.stage_ops[idx(StageId::kMem)] = op::kMemRd;
  p.stage_ops[idx(StageId::kGen)] = op::kGenLoad;
  p.stage_ops[idx(StageId::kSgnPop)] = op::kSgnPop;
  p.stage_ops[idx(StageId::kDc)] = first_fold ? op::kDcDset : op::kDcDacc;
  p.slot = slot;
  p.rf = rf;
  p.qreg = 0;  // fold 0 always scores against QRY[0]
  p.dreg = dreg;
  return p;
}

PrimitiveOp rf_pop(std::uint8_t rf, bool step, std::uint8_t qreg, std::uint8_t dreg,
                   bool first_fold) {
  auto p = base(OpKind::kRfPop);
  p.stage_ops[idx(StageId::kGen)] = step ? op::kGenStep : op::kGenRead;
  p.stage_ops[idx(StageId::kSgnPop)] = op::kSgnPop;
  p.stage_ops[idx(StageId::kDc)] = first_fold ? op::kDcDset : op::kDcDacc;
  p.rf = rf;
  p.qreg = qreg;
  p.dreg = dreg;
  return p;
}

PrimitiveOp mem_pop(std::uint16_t slot, std::uint8_t qreg, std::uint8_t dreg,
                    bool first_fold) {
  auto p = base(OpKind::kMemPop);
  p.stage_ops[idx(StageId::kMem)] = op::kMemRd;
  p.stage_ops[idx(StageId::kSgnPop)] = op::kSgnPop;
  p.stage_ops[idx(StageId::kDc)] = first_fold ? op::kDcDset : op::kDcDacc;
  p.slot = slot;
  p.qreg = qreg;
  p.dreg = dreg;
  return p;
}

PrimitiveOp qry_load(std::uint16_t slot, std::uint8_t qreg) {
  auto p = base(OpKind::kQryLoad);
  p.stage_ops[idx(StageId::kMem)] = op::kMemLdq;
  p.slot = slot;
  p.qreg = qreg;
  return p;
}

PrimitiveOp qry_load_bcast(std::uint16_t slot, std::uint8_t qreg, std::uint8_t owner) {
  auto p = base(OpKind::kQryLoad);
  p.stage_ops[idx(StageId::kMem)] = op::kMemLdqb;
  p.slot = slot;
  p.qreg = qreg;
  p.owner = owner;
  return p;
}

PrimitiveOp mem_to_bb(std::uint16_t slot, bool first) {
  auto p = base(OpKind::kMemToBb);
  p.stage_ops[idx(StageId::kMem)] = op::kMemRd;
  p.stage_ops[idx(StageId::kBind)] = first ? op::kBindLd : op::kBindXor;
  p.slot = slot;
  return p;
}

PrimitiveOp mem_to_bb_bcast(std::uint16_t slot, std::uint8_t owner, bool first) {
  auto p = mem_to_bb(slot, first);
  p.stage_ops[idx(StageId::kMem)] = op::kMemRdb;
  p.owner = owner;
  return p;
}

PrimitiveOp rf_to_bb(std::uint8_t rf, bool step, bool first) {
  auto p = base(OpKind::kRfToBb);
  p.stage_ops[idx(StageId::kGen)] = step ? op::kGenStep : op::kGenRead;
  p.stage_ops[idx(StageId::kBind)] = first ? op::kBindLd : op::kBindXor;
  p.rf = rf;
  return p;
}

PrimitiveOp shf_bind(std::uint8_t ra, std::uint8_t rb, std::uint8_t j, bool first) {
  auto p = base(OpKind::kShfBind);
  p.stage_ops[idx(StageId::kGen)] = op::kGenShf;
  p.stage_ops[idx(StageId::kBind)] = first ? op::kBindLd : op::kBindXor;
  p.rf = ra;
  p.rf2 = rb;
  p.imm = static_cast<std::int8_t>(j);
  return p;
}

PrimitiveOp rf_cvt_acc(std::uint8_t rf, bool step, std::uint8_t bnd, bool set,
                       bool with_bind) {
  auto p = base(OpKind::kRfVopAcc);
  p.stage_ops[idx(StageId::kGen)] = step ? op::kGenStep : op::kGenRead;
  if (with_bind) p.stage_ops[idx(StageId::kBind)] = op::kBindXor;
  p.stage_ops[idx(StageId::kMult)] = op::kMultCvt;
  p.stage_ops[idx(StageId::kBnd)] = set ? op::kBndSet : op::kBndAcc;
  p.rf = rf;
  p.bnd = bnd;
  return p;
}

PrimitiveOp rf_muli_acc(std::uint8_t rf, bool step, std::uint8_t bnd, bool set,
                        std::int8_t imm) {
  auto p = base(OpKind::kRfVopAcc);
  p.stage_ops[idx(StageId::kGen)] = step ? op::kGenStep : op::kGenRead;
  p.stage_ops[idx(StageId::kMult)] = op::kMultMuli;
  p.stage_ops[idx(StageId::kBnd)] = set ? op::kBndSet : op::kBndAcc;
  p.rf = rf;
  p.bnd = bnd;
  p.imm = imm;
  return p;
}

PrimitiveOp rf_muld_acct(std::uint8_t rf, bool step, std::uint8_t dreg,
                         std::uint8_t owner, bool set) {
  auto p = base(OpKind::kRfVopAcc);
  p.stage_ops[idx(StageId::kGen)] = step ? op::kGenStep : op::kGenRead;
  p.stage_ops[idx(StageId::kMult)] = op::kMultMuld;
  p.stage_ops[idx(StageId::kBnd)] = set ? op::kBndSetT : op::kBndAccT;
  p.rf = rf;
  p.dreg = dreg;
  p.owner = owner;
  return p;
}

PrimitiveOp rf_step(std::uint8_t rf) {
  auto p = base(OpKind::kRfStep);
  p.stage_ops[idx(StageId::kGen)] = op::kGenStep;
  p.rf = rf;
  return p;
}

PrimitiveOp mem_cvt_acc(std::uint16_t slot, std::uint8_t bnd, bool set) {
  auto p = base(OpKind::kMemVopAcc);
  p.stage_ops[idx(StageId::kMem)] = op::kMemRd;
  p.stage_ops[idx(StageId::kMult)] = op::kMultCvt;
  p.stage_ops[idx(StageId::kBnd)] = set ? op::kBndSet : op::kBndAcc;
  p.slot = slot;
  p.bnd = bnd;
  return p;
}

PrimitiveOp mem_cvt_acc_bcast(std::uint16_t slot, std::uint8_t owner, std::uint8_t bnd,
                              bool set) {
  auto p = mem_cvt_acc(slot, bnd, set);
  p.stage_ops[idx(StageId::kMem)] = op::kMemRdb;
  p.owner = owner;
  return p;
}

PrimitiveOp bb_store(std::uint16_t slot) {
  auto p = base(OpKind::kBbStore);
  p.stage_ops[idx(StageId::kSgnPop)] = op::kSgnPassb;
  p.stage_ops[idx(StageId::kDc)] = op::kDcSt;
  p.slot = slot;
  return p;
}

PrimitiveOp bb_store_owned(std::uint16_t slot, std::uint8_t owner) {
  auto p = bb_store(slot);
  p.stage_ops[idx(StageId::kDc)] = op::kDcSto;
  p.owner = owner;
  return p;
}

PrimitiveOp sgn_store_owned(std::uint8_t bnd, std::uint16_t slot, std::uint8_t owner) {
  auto p = sgn_store(bnd, slot);
  p.stage_ops[idx(StageId::kDc)] = op::kDcSto;
  p.owner = owner;
  return p;
}

PrimitiveOp sgn_store(std::uint8_t bnd, std::uint16_t slot) {
  auto p = base(OpKind::kSgnStore);
  p.stage_ops[idx(StageId::kSgnPop)] = op::kSgnSgn;
  p.stage_ops[idx(StageId::kDc)] = op::kDcSt;
  p.slot = slot;
  p.bnd = bnd;
  return p;
}

PrimitiveOp bnd_target(std::uint8_t bnd) {
  auto p = base(OpKind::kBndTarget);
  p.stage_ops[idx(StageId::kBnd)] = op::kBndTgt;
  p.bnd = bnd;
  return p;
}

PrimitiveOp amax(std::uint16_t vec_slot, std::uint8_t dreg) {
  auto p = base(OpKind::kAmax);
  p.stage_ops[idx(StageId::kDc)] = op::kDcAmax;
  p.slot = vec_slot;
  p.dreg = dreg;
  return p;
}

PrimitiveOp afin() {
  auto p = base(OpKind::kAfin);
  p.stage_ops[idx(StageId::kDc)] = op::kDcAfin;
  return p;
}

}  // namespace vsaforge::isa
