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

#include <string>
#include <vector>

#include "vsaforge/isa.hpp"

namespace vsaforge::isa {

// Assembly text: one Instruction Word per line,
//   MEM=RD GEN=STEP BIND=NOP MUL=NOP BND=NOP SGN=POP DC=DACC PARAM=0x01A3
// with `#` comments and case-insensitive mnemonics. All eight fields are
// required on every line.

/// Parses assembly text into words. Errors carry the offending line number
/// and field.
std::vector<InstructionWord> assemble(const std::string& text);

/// Canonical uppercase rendering; assemble(disassemble(w)) == w.
std::string disassemble(const std::vector<InstructionWord>& words);

}  // namespace vsaforge::isa
