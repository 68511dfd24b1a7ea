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

#include "vsaforge/isa.hpp"

#include <algorithm>
#include <cctype>
#include <vector>

#include "vsaforge/errors.hpp"

namespace vsaforge::isa {

namespace {

struct NameTable {
  StageId stage;
  std::vector<std::string_view> names;  // index = opcode
};

const std::array<NameTable, kNumStages>& tables() {
  static const std::array<NameTable, kNumStages> t{{
      {StageId::kMem, {"NOP", "RD", "RDB", "LDQ", "LDQB"}},
      {StageId::kGen, {"NOP", "LOAD", "LOADF", "STEP", "READ", "SHF", "LOADN"}},
      {StageId::kBind, {"NOP", "LD", "XOR"}},
      {StageId::kMult, {"NOP", "CVT", "MULI", "MULD"}},
      {StageId::kBnd, {"NOP", "SET", "ACC", "TGT", "SETT", "ACCT"}},
      {StageId::kSgnPop, {"NOP", "SGN", "POP", "PASSB"}},
      {StageId::kDc, {"NOP", "DSET", "DACC", "AMAX", "AFIN", "ST", "STO"}},
  }};
  return t;
}

constexpr std::array<std::string_view, kNumStages> kStageNames{
    "MEM", "GEN", "BIND", "MUL", "BND", "SGN", "DC"};

}  // namespace

std::string_view stage_name(StageId s) { return kStageNames[static_cast<int>(s)]; }

std::uint8_t stage_max_opcode(StageId s) {
  return static_cast<std::uint8_t>(tables()[static_cast<int>(s)].names.size() - 1);
}

std::string_view opcode_name(StageId s, std::uint8_t code) {
  const auto& names = tables()[static_cast<int>(s)].names;
  if (code >= names.size()) throw ConfigError("opcode out of range");
  return names[code];
}

int opcode_from_name(StageId s, std::string_view name) {
  std::string upper(name);
  std::transform(upper.begin(), upper.end(), upper.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  const auto& names = tables()[static_cast<int>(s)].names;
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == upper) return static_cast<int>(i);
  return -1;
}

std::uint64_t encode_word(const InstructionWord& w) {
  std::uint64_t bits = 0;
  for (int s = 0; s < kNumStages; ++s)
    bits |= (std::uint64_t{w.types[s]} & 0xF) << (4 * s);
  bits |= std::uint64_t{w.op_param} << 28;
  return bits;
}

InstructionWord decode_word(std::uint64_t bits) {
  if (bits >> 44 != 0) throw ParseError("nonzero reserved instruction bits");
  InstructionWord w;
  for (int s = 0; s < kNumStages; ++s) {
    const auto code = static_cast<std::uint8_t>((bits >> (4 * s)) & 0xF);
    if (code > stage_max_opcode(static_cast<StageId>(s)))
      throw ParseError("unknown opcode " + std::to_string(code) + " for stage " +
                       std::string(stage_name(static_cast<StageId>(s))));
    w.types[s] = code;
  }
  w.op_param = static_cast<std::uint16_t>((bits >> 28) & 0xFFFF);
  return w;
}

}  // namespace vsaforge::isa
