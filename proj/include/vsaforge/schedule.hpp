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
#include <iosfwd>
#include <string>
#include <vector>

#include "vsaforge/config.hpp"
#include "vsaforge/isa.hpp"
#include "vsaforge/primitives.hpp"

namespace vsaforge::isa {

enum class ControlMode { kSopc, kMopc };

std::string_view control_mode_name(ControlMode m);

/// A scheduled instruction stream: the encoded words plus the source
/// primitive ops and their issue cycles (the word index of each op's first
/// stage). The metadata makes hazard re-derivation and simulation unambiguous.
struct Program {
  ControlMode mode = ControlMode::kSopc;
  std::vector<InstructionWord> words;
  std::vector<PrimitiveOp> ops;
  std::vector<std::uint32_t> issue_cycle;

  std::size_t num_words() const { return words.size(); }
};

/// Architectural resources for hazard analysis.
enum class ResKind : std::uint8_t {
  kMemSlot,
  kCa90Rf,
  kQry,
  kBindBuf,
  kBndRf,
  kBndTarget,
  kDsum,
  kArgmax,
};

struct ResAccess {
  ResKind kind;
  std::uint16_t index;    // slot or register id (0 for singleton resources)
  int stage_offset;       // position within the op's compressed path
  bool write;
};

/// Resource footprint of one op. Striped memory ops expand to the K slots
/// they may touch. ACCT resolves the bundling target from `bnd_target`, the
/// value selected by the last preceding SETT.
std::vector<ResAccess> analyze(const PrimitiveOp& op, const AccConfig& cfg,
                               std::uint8_t bnd_target);

/// One word per stage per op, strictly in order: at most one non-NOP Type per
/// word and no overlap between ops.
Program schedule_sopc(const std::vector<PrimitiveOp>& ops, const AccConfig& cfg);

/// Greedy in-order list scheduling with software pipelining: each op is
/// placed at the earliest start cycle respecting structural hazards (one op
/// per stage per cycle), data hazards on architectural resources, and
/// strictly increasing issue order. Never produces more words than SOPC.
Program schedule_mopc(const std::vector<PrimitiveOp>& ops, const AccConfig& cfg);

/// Re-derives structural and data hazards from the decoded words plus the
/// schedule metadata and checks operand ranges against the config. Returns an
/// empty list when the program is well-formed; never throws on violations.
std::vector<std::string> validate(const Program& p, const AccConfig& cfg);

// Binary program container ("VSAP"): magic, u16 version, u32 word count,
// little-endian 64-bit words.
inline constexpr std::uint16_t kVsapVersion = 1;
void write_program_words(std::ostream& os, const Program& p);
std::vector<std::uint64_t> read_program_words(std::istream& is);

}  // namespace vsaforge::isa
