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

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

namespace vsaforge::isa {

// Seven pipeline stages in dataflow order: memory read and query load; CA-90
// fold generation and its register file; binding; format conversion and
// scalar multiply; bundling accumulate; sign and popcount; distance
// accumulate, argmax, and writeback.
enum class StageId : std::uint8_t {
  kMem = 0,
  kGen = 1,
  kBind = 2,
  kMult = 3,
  kBnd = 4,
  kSgnPop = 5,
  kDc = 6,
};

inline constexpr int kNumStages = 7;

std::string_view stage_name(StageId s);

// Per-stage operation codes. 0 is NOP in every stage.
namespace op {
// MEM: memory read & query load
inline constexpr std::uint8_t kNop = 0;
inline constexpr std::uint8_t kMemRd = 1;    // read own tile's fold at slot
inline constexpr std::uint8_t kMemRdb = 2;   // owner tile reads, value broadcast
inline constexpr std::uint8_t kMemLdq = 3;   // QRY[q] <- own sram[slot]
inline constexpr std::uint8_t kMemLdqb = 4;  // QRY[q] <- owner sram[slot], broadcast
inline constexpr std::uint8_t kMemMax = 4;

// GEN: CA-90 unit and register file
inline constexpr std::uint8_t kGenLoad = 1;   // RF[r] <- incoming fold
inline constexpr std::uint8_t kGenLoadf = 2;  // RF[r] <- ca90^(e + tile)(incoming)
inline constexpr std::uint8_t kGenStep = 3;   // RF[r] <- ca90(RF[r])
inline constexpr std::uint8_t kGenRead = 4;   // forward RF[r] unchanged
inline constexpr std::uint8_t kGenShf = 5;    // funnel (RF[ra] >> j) | (RF[rb] << (W-j))
inline constexpr std::uint8_t kGenLoadn = 6;  // RF[r] <- ca90^n(incoming), uniform n
inline constexpr std::uint8_t kGenMax = 6;

// BIND: XOR unit with its chaining buffer
inline constexpr std::uint8_t kBindLd = 1;   // BB <- fold
inline constexpr std::uint8_t kBindXor = 2;  // BB <- BB ^ fold, forward BB
inline constexpr std::uint8_t kBindMax = 2;

// MULT: binary->integer conversion and scalar multiply
inline constexpr std::uint8_t kMultCvt = 1;   // lanes <- bipolar(fold)
inline constexpr std::uint8_t kMultMuli = 2;  // lanes <- bipolar(fold) * imm
inline constexpr std::uint8_t kMultMuld = 3;  // lanes <- bipolar(fold) * clampH(DSUM[d] of owner)
inline constexpr std::uint8_t kMultMax = 3;

// BND: bundling accumulator register file
inline constexpr std::uint8_t kBndSet = 1;   // BND[b] <- sat(lanes)
inline constexpr std::uint8_t kBndAcc = 2;   // BND[b] <- sat(BND[b] + lanes)
inline constexpr std::uint8_t kBndTgt = 3;   // bnd target latch <- b
inline constexpr std::uint8_t kBndSetT = 4;  // BND[target] <- sat(lanes)
inline constexpr std::uint8_t kBndAccT = 5;  // BND[target] <- sat(BND[target] + lanes)
inline constexpr std::uint8_t kBndMax = 5;

// SGN/POP: sign readout and popcount distance
inline constexpr std::uint8_t kSgnSgn = 1;    // fold <- sign(BND[b])
inline constexpr std::uint8_t kSgnPop = 2;    // score <- W - 2*pop(fold ^ QRY[q])
inline constexpr std::uint8_t kSgnPassb = 3;  // fold <- BB
inline constexpr std::uint8_t kSgnMax = 3;

// DC: distance registers, argmax, store
inline constexpr std::uint8_t kDcDset = 1;  // DSUM[d] <- sat(score)
inline constexpr std::uint8_t kDcDacc = 2;  // DSUM[d] <- sat(DSUM[d] + score)
inline constexpr std::uint8_t kDcAmax = 3;  // argmax update with DSUM[d] per local slot
inline constexpr std::uint8_t kDcAfin = 4;  // merge per-tile argmax, emit result, reset
inline constexpr std::uint8_t kDcSt = 5;    // sram[slot] <- each tile's own fold
inline constexpr std::uint8_t kDcSto = 6;   // owner tile only: sram[slot] <- fold
inline constexpr std::uint8_t kDcMax = 6;
}  // namespace op

std::uint8_t stage_max_opcode(StageId s);
std::string_view opcode_name(StageId s, std::uint8_t code);
/// Returns the opcode for a mnemonic in the given stage, or -1 if unknown.
int opcode_from_name(StageId s, std::string_view name);

/// One ISA word: seven 4-bit stage opcode fields plus a 16-bit parameter.
/// Encoded layout: bits 0-27 carry the stage fields (kMem lowest), bits 28-43
/// the parameter, bits 44-63 are reserved and must be zero.
struct InstructionWord {
  std::array<std::uint8_t, kNumStages> types{};  // 0 = NOP
  std::uint16_t op_param = 0;

  bool all_nop() const {
    for (auto t : types)
      if (t != 0) return false;
    return true;
  }

  friend bool operator==(const InstructionWord&, const InstructionWord&) = default;
};

std::uint64_t encode_word(const InstructionWord& w);
/// Rejects unknown opcodes and nonzero reserved bits with ParseError.
InstructionWord decode_word(std::uint64_t bits);

}  // namespace vsaforge::isa
