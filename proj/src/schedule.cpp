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

#include "vsaforge/schedule.hpp"

#include <istream>
#include <map>
#include <ostream>

#include "vsaforge/errors.hpp"

namespace vsaforge::isa {

std::string_view control_mode_name(ControlMode m) {
  return m == ControlMode::kSopc ? "sopc" : "mopc";
}

namespace {

constexpr int idx(StageId s) { return static_cast<int>(s); }

/// Ordered list of (global stage, opcode) pairs for an op.
std::vector<std::pair<int, std::uint8_t>> path_of(const PrimitiveOp& op) {
  std::vector<std::pair<int, std::uint8_t>> path;
  for (int s = 0; s < kNumStages; ++s)
    if (op.stage_ops[s] != 0) path.emplace_back(s, op.stage_ops[s]);
  return path;
}

void add_mem_range(std::vector<ResAccess>& out, std::uint16_t slot, std::uint32_t span,
                   int stage_offset, bool write) {
  for (std::uint32_t i = 0; i < span; ++i)
    out.push_back({ResKind::kMemSlot, static_cast<std::uint16_t>(slot + i),
                   stage_offset, write});
}

}  // namespace

std::vector<ResAccess> analyze(const PrimitiveOp& op, const AccConfig& cfg,
                               std::uint8_t bnd_target) {
  (void)cfg;
  std::vector<ResAccess> out;
  const auto path = path_of(op);
  for (std::size_t m = 0; m < path.size(); ++m) {
    const auto [stage, code] = path[m];
    const int off = static_cast<int>(m);
    switch (static_cast<StageId>(stage)) {
      case StageId::kMem:
        switch (code) {
          case op::kMemRd:
          case op::kMemRdb:
            add_mem_range(out, op.slot, 1, off, false);
            break;
          case op::kMemLdq:
          case op::kMemLdqb:
            add_mem_range(out, op.slot, 1, off, false);
            out.push_back({ResKind::kQry, op.qreg, off, true});
            break;
          default:
            break;
        }
        break;
      case StageId::kGen:
        switch (code) {
          case op::kGenLoad:
          case op::kGenLoadf:
          case op::kGenLoadn:
            out.push_back({ResKind::kCa90Rf, op.rf, off, true});
            break;
          case op::kGenStep:
            out.push_back({ResKind::kCa90Rf, op.rf, off, false});
            out.push_back({ResKind::kCa90Rf, op.rf, off, true});
            break;
          case op::kGenRead:
            out.push_back({ResKind::kCa90Rf, op.rf, off, false});
            break;
          case op::kGenShf:
            out.push_back({ResKind::kCa90Rf, op.rf, off, false});
            out.push_back({ResKind::kCa90Rf, op.rf2, off, false});
            break;
          default:
            break;
        }
        break;
      case StageId::kBind:
        if (code == op::kBindLd) {
          out.push_back({ResKind::kBindBuf, 0, off, true});
        } else if (code == op::kBindXor) {
          out.push_back({ResKind::kBindBuf, 0, off, false});
          out.push_back({ResKind::kBindBuf, 0, off, true});
        }
        break;
      case StageId::kMult:
        if (code == op::kMultMuld)
          out.push_back({ResKind::kDsum, op.dreg, off, false});
        break;
      case StageId::kBnd:
        switch (code) {
          case op::kBndSet:
            out.push_back({ResKind::kBndRf, op.bnd, off, true});
            break;
          case op::kBndAcc:
            out.push_back({ResKind::kBndRf, op.bnd, off, false});
            out.push_back({ResKind::kBndRf, op.bnd, off, true});
            break;
          case op::kBndTgt:
            out.push_back({ResKind::kBndTarget, 0, off, true});
            break;
          case op::kBndSetT:
            out.push_back({ResKind::kBndTarget, 0, off, false});
            out.push_back({ResKind::kBndRf, bnd_target, off, true});
            break;
          case op::kBndAccT:
            out.push_back({ResKind::kBndTarget, 0, off, false});
            out.push_back({ResKind::kBndRf, bnd_target, off, false});
            out.push_back({ResKind::kBndRf, bnd_target, off, true});
            break;
          default:
            break;
        }
        break;
      case StageId::kSgnPop:
        if (code == op::kSgnSgn) {
          out.push_back({ResKind::kBndRf, op.bnd, off, false});
        } else if (code == op::kSgnPop) {
          out.push_back({ResKind::kQry, op.qreg, off, false});
        } else if (code == op::kSgnPassb) {
          out.push_back({ResKind::kBindBuf, 0, off, false});
        }
        break;
      case StageId::kDc:
        switch (code) {
          case op::kDcDset:
            out.push_back({ResKind::kDsum, op.dreg, off, true});
            break;
          case op::kDcDacc:
            out.push_back({ResKind::kDsum, op.dreg, off, false});
            out.push_back({ResKind::kDsum, op.dreg, off, true});
            break;
          case op::kDcAmax:
            out.push_back({ResKind::kDsum, op.dreg, off, false});
            out.push_back({ResKind::kArgmax, 0, off, false});
            out.push_back({ResKind::kArgmax, 0, off, true});
            break;
          case op::kDcAfin:
            out.push_back({ResKind::kArgmax, 0, off, false});
            out.push_back({ResKind::kArgmax, 0, off, true});
            break;
          case op::kDcSt:
          case op::kDcSto:
            add_mem_range(out, op.slot, 1, off, true);
            break;
          default:
            break;
        }
        break;
    }
  }
  return out;
}

Program schedule_sopc(const std::vector<PrimitiveOp>& ops, const AccConfig& cfg) {
  (void)cfg;
  Program p;
  p.mode = ControlMode::kSopc;
  p.ops = ops;
  p.issue_cycle.reserve(ops.size());
  for (const auto& op : ops) {
    p.issue_cycle.push_back(static_cast<std::uint32_t>(p.words.size()));
    bool first = true;
    for (const auto& [stage, code] : path_of(op)) {
      InstructionWord w;
      w.types[stage] = code;
      w.op_param = first ? op.pack_param() : 0;
      first = false;
      p.words.push_back(w);
    }
  }
  return p;
}

Program schedule_mopc(const std::vector<PrimitiveOp>& ops, const AccConfig& cfg) {
  Program p;
  p.mode = ControlMode::kMopc;
  p.ops = ops;
  p.issue_cycle.reserve(ops.size());

  // occupancy per stage, indexed by cycle
  std::array<std::vector<std::uint8_t>, kNumStages> stage_busy;
  const auto busy = [&](int stage, std::int64_t c) {
    return c < static_cast<std::int64_t>(stage_busy[stage].size()) &&
           stage_busy[stage][static_cast<std::size_t>(c)] != 0;
  };
  const auto mark = [&](int stage, std::int64_t c) {
    auto& v = stage_busy[stage];
    if (c >= static_cast<std::int64_t>(v.size()))
      v.resize(static_cast<std::size_t>(c) + 1, 0);
    v[static_cast<std::size_t>(c)] = 1;
  };
  struct ResState {
    std::int64_t last_write = -1;
    std::int64_t last_access = -1;
  };
  std::map<std::uint64_t, ResState> res_state;
  const auto res_key = [](const ResAccess& a) {
    return (std::uint64_t{static_cast<std::uint8_t>(a.kind)} << 32) | a.index;
  };

  std::int64_t prev_start = -1;
  std::uint8_t bnd_target = 0;
  for (const auto& op : ops) {
    const auto path = path_of(op);
    const auto accesses = analyze(op, cfg, bnd_target);

    // Lower bound from data hazards, then search upward for a structurally
    // free placement.
    std::int64_t start = prev_start + 1;
    for (const auto& a : accesses) {
      const auto it = res_state.find(res_key(a));
      if (it == res_state.end()) continue;
      const std::int64_t floor_cycle =
          (a.write ? it->second.last_access : it->second.last_write) + 1;
      if (floor_cycle - a.stage_offset > start) start = floor_cycle - a.stage_offset;
    }
    for (;; ++start) {
      bool free = true;
      for (std::size_t m = 0; m < path.size(); ++m) {
        if (busy(path[m].first, start + static_cast<std::int64_t>(m))) {
          free = false;
          break;
        }
      }
      if (free) break;
    }

    for (std::size_t m = 0; m < path.size(); ++m)
      mark(path[m].first, start + static_cast<std::int64_t>(m));
    for (const auto& a : accesses) {
      auto& st = res_state[res_key(a)];
      const std::int64_t c = start + a.stage_offset;
      if (a.write && c > st.last_write) st.last_write = c;
      if (c > st.last_access) st.last_access = c;
    }
    p.issue_cycle.push_back(static_cast<std::uint32_t>(start));
    prev_start = start;
    if (op.kind == OpKind::kBndTarget) bnd_target = op.bnd;
  }

  // Assemble words: union of stage ops active per cycle.
  std::int64_t total = 0;
  for (std::size_t i = 0; i < ops.size(); ++i) {
    const auto len = static_cast<std::int64_t>(path_of(ops[i]).size());
    if (p.issue_cycle[i] + len > total) total = p.issue_cycle[i] + len;
  }
  p.words.assign(static_cast<std::size_t>(total), InstructionWord{});
  for (std::size_t i = 0; i < ops.size(); ++i) {
    const auto path = path_of(ops[i]);
    for (std::size_t m = 0; m < path.size(); ++m)
      p.words[p.issue_cycle[i] + m].types[path[m].first] = path[m].second;
    p.words[p.issue_cycle[i]].op_param = ops[i].pack_param();
  }
  return p;
}

std::vector<std::string> validate(const Program& p, const AccConfig& cfg) {
  std::vector<std::string> violations;
  const auto complain = [&](std::string msg) { violations.push_back(std::move(msg)); };

  if (p.ops.size() != p.issue_cycle.size()) {
    complain("metadata size mismatch: ops vs issue cycles");
    return violations;
  }

  // Operand ranges against the config.
  const std::uint32_t slots = cfg.sram_slots_per_tile();
  for (std::size_t i = 0; i < p.ops.size(); ++i) {
    const auto& op = p.ops[i];
    const std::string tag = "op " + std::to_string(i) + ": ";
    if (op.active(StageId::kGen) && op.rf >= cfg.ca90_rf_regs &&
        op.stage_ops[idx(StageId::kGen)] != op::kGenShf)
      complain(tag + "CA90_RF index " + std::to_string(op.rf) + " >= R=" +
               std::to_string(cfg.ca90_rf_regs));
    if (op.stage_ops[idx(StageId::kGen)] == op::kGenShf &&
        (op.rf >= cfg.ca90_rf_regs || op.rf2 >= cfg.ca90_rf_regs))
      complain(tag + "SHF register out of range");
    const auto s5 = op.stage_ops[idx(StageId::kBnd)];
    if ((s5 == op::kBndSet || s5 == op::kBndAcc || s5 == op::kBndTgt) &&
        op.bnd >= cfg.bnd_rf_regs)
      complain(tag + "BND_RF index " + std::to_string(op.bnd) + " >= B=" +
               std::to_string(cfg.bnd_rf_regs));
    if (op.stage_ops[idx(StageId::kSgnPop)] == op::kSgnSgn && op.bnd >= cfg.bnd_rf_regs)
      complain(tag + "SGN reads BND_RF index out of range");
    const auto s7 = op.stage_ops[idx(StageId::kDc)];
    if ((s7 == op::kDcDset || s7 == op::kDcDacc || s7 == op::kDcAmax ||
         op.stage_ops[idx(StageId::kMult)] == op::kMultMuld) &&
        op.dreg >= cfg.dsum_regs)
      complain(tag + "DSUM index " + std::to_string(op.dreg) + " >= D=" +
               std::to_string(cfg.dsum_regs));
    if (op.stage_ops[idx(StageId::kSgnPop)] == op::kSgnPop && op.qreg >= 8)
      complain(tag + "QRY index out of range");
    if (op.active(StageId::kMem) || s7 == op::kDcSt || s7 == op::kDcSto) {
      if (op.slot >= slots)
        complain(tag + "sram slot " + std::to_string(op.slot) + " exceeds " +
                 std::to_string(slots));
    }
    if ((op.stage_ops[idx(StageId::kMem)] == op::kMemRdb ||
         op.stage_ops[idx(StageId::kMem)] == op::kMemLdqb || s7 == op::kDcSto) &&
        op.owner >= cfg.tiles)
      complain(tag + "owner tile out of range");
  }

  // Issue order and word-stream consistency: re-derive the expected words.
  std::vector<InstructionWord> expect(p.words.size());
  for (std::size_t i = 0; i < p.ops.size(); ++i) {
    if (i > 0 && p.issue_cycle[i] <= p.issue_cycle[i - 1])
      complain("op " + std::to_string(i) + ": issue order not strictly increasing");
    const auto path = path_of(p.ops[i]);
    for (std::size_t m = 0; m < path.size(); ++m) {
      const std::size_t c = p.issue_cycle[i] + m;
      if (c >= expect.size()) {
        complain("op " + std::to_string(i) + ": schedule exceeds word stream");
        break;
      }
      if (expect[c].types[path[m].first] != 0)
        complain("structural hazard: ops collide at cycle " + std::to_string(c) +
                 " stage " + std::string(stage_name(static_cast<StageId>(path[m].first))));
      expect[c].types[path[m].first] = path[m].second;
    }
    if (p.issue_cycle[i] < expect.size())
      expect[p.issue_cycle[i]].op_param = p.ops[i].pack_param();
  }
  for (std::size_t c = 0; c < p.words.size(); ++c) {
    if (!(p.words[c] == expect[c])) {
      complain("word " + std::to_string(c) + " does not match schedule metadata");
      break;
    }
  }

  if (p.mode == ControlMode::kSopc) {
    for (std::size_t c = 0; c < p.words.size(); ++c) {
      int active = 0;
      for (auto t : p.words[c].types) active += t != 0;
      if (active > 1)
        complain("SOPC word " + std::to_string(c) + " has " + std::to_string(active) +
                 " active stages");
    }
  }

  // Data hazards, replayed in issue order.
  struct ResState {
    std::int64_t last_write = -1;
    std::int64_t last_access = -1;
    std::size_t writer = 0;
  };
  std::map<std::uint64_t, ResState> res_state;
  const auto res_key = [](const ResAccess& a) {
    return (std::uint64_t{static_cast<std::uint8_t>(a.kind)} << 32) | a.index;
  };
  std::uint8_t bnd_target = 0;
  for (std::size_t i = 0; i < p.ops.size(); ++i) {
    const auto accesses = analyze(p.ops[i], cfg, bnd_target);
    for (const auto& a : accesses) {
      const std::int64_t c = p.issue_cycle[i] + a.stage_offset;
      const auto it = res_state.find(res_key(a));
      if (it != res_state.end()) {
        if (!a.write && c <= it->second.last_write)
          complain("data hazard: op " + std::to_string(i) + " reads resource written at cycle " +
                   std::to_string(it->second.last_write) + " by op " +
                   std::to_string(it->second.writer));
        if (a.write && c <= it->second.last_access)
          complain("data hazard: op " + std::to_string(i) +
                   " writes resource still in use at cycle " +
                   std::to_string(it->second.last_access));
      }
    }
    for (const auto& a : accesses) {
      auto& st = res_state[res_key(a)];
      const std::int64_t c = p.issue_cycle[i] + a.stage_offset;
      if (a.write && c > st.last_write) {
        st.last_write = c;
        st.writer = i;
      }
      if (c > st.last_access) st.last_access = c;
    }
    if (p.ops[i].kind == OpKind::kBndTarget) bnd_target = p.ops[i].bnd;
  }

  return violations;
}

void write_program_words(std::ostream& os, const Program& p) {
  os.write("VSAP", 4);
  const std::uint16_t ver = kVsapVersion;
  os.put(static_cast<char>(ver & 0xFF));
  os.put(static_cast<char>(ver >> 8));
  const auto n = static_cast<std::uint32_t>(p.words.size());
  for (int i = 0; i < 4; ++i) os.put(static_cast<char>((n >> (8 * i)) & 0xFF));
  for (const auto& w : p.words) {
    const std::uint64_t bits = encode_word(w);
    for (int i = 0; i < 8; ++i) os.put(static_cast<char>((bits >> (8 * i)) & 0xFF));
  }
  if (!os) throw IoError("program write failed");
}

std::vector<std::uint64_t> read_program_words(std::istream& is) {
  char magic[4];
  is.read(magic, 4);
  if (!is || std::string(magic, 4) != "VSAP") throw IoError("bad VSAP magic");
  unsigned char vb[2];
  is.read(reinterpret_cast<char*>(vb), 2);
  if ((vb[0] | (vb[1] << 8)) != kVsapVersion) throw IoError("unsupported VSAP version");
  unsigned char nb[4];
  is.read(reinterpret_cast<char*>(nb), 4);
  std::uint32_t n = 0;
  for (int i = 0; i < 4; ++i) n |= std::uint32_t{nb[i]} << (8 * i);
  std::vector<std::uint64_t> words(n);
  for (auto& w : words) {
    unsigned char b[8];
    is.read(reinterpret_cast<char*>(b), 8);
    if (!is) throw IoError("truncated VSAP payload");
    w = 0;
    for (int i = 0; i < 8; ++i) w |= std::uint64_t{b[i]} << (8 * i);
  }
  return words;
}

}  // namespace vsaforge::isa
