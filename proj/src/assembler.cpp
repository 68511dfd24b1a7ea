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

#include "vsaforge/assembler.hpp"

#include <cctype>
#include <cstdio>
#include <sstream>

#include "vsaforge/errors.hpp"

namespace vsaforge::isa {

namespace {

constexpr std::array<std::string_view, kNumStages + 1> kFieldNames{
    "MEM", "GEN", "BIND", "MUL", "BND", "SGN", "DC", "PARAM"};

std::string upper(std::string_view s) {
  std::string out(s);
  for (auto& c : out) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return out;
}

}  // namespace

std::vector<InstructionWord> assemble(const std::string& text) {
  std::vector<InstructionWord> words;
  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> fields;
    std::string tok;
    while (ls >> tok) fields.push_back(tok);
    if (fields.empty()) continue;
    if (fields.size() != kNumStages + 1)
      throw ParseError("expected 8 fields (MEM..DC, PARAM), got " +
                           std::to_string(fields.size()),
                       lineno);
    InstructionWord w;
    for (std::size_t f = 0; f < fields.size(); ++f) {
      const auto eq = fields[f].find('=');
      if (eq == std::string::npos)
        throw ParseError("field '" + fields[f] + "' is not NAME=VALUE", lineno);
      const std::string name = upper(fields[f].substr(0, eq));
      const std::string value = fields[f].substr(eq + 1);
      if (name != kFieldNames[f])
        throw ParseError("expected field " + std::string(kFieldNames[f]) + ", got " + name,
                         lineno);
      if (f < kNumStages) {
        const int code = opcode_from_name(static_cast<StageId>(f), value);
        if (code < 0)
          throw ParseError("unknown mnemonic '" + value + "' in field " + name, lineno);
        w.types[f] = static_cast<std::uint8_t>(code);
      } else {
        if (value.size() < 3 || (value.rfind("0x", 0) != 0 && value.rfind("0X", 0) != 0))
          throw ParseError("PARAM must be hexadecimal 0xNNNN", lineno);
        char* end = nullptr;
        const unsigned long v = std::strtoul(value.c_str() + 2, &end, 16);
        if (end == nullptr || *end != '\0' || v > 0xFFFF)
          throw ParseError("PARAM out of range: " + value, lineno);
        w.op_param = static_cast<std::uint16_t>(v);
      }
    }
    words.push_back(w);
  }
  return words;
}

std::string disassemble(const std::vector<InstructionWord>& words) {
  std::ostringstream os;
  for (const auto& w : words) {
    for (int s = 0; s < kNumStages; ++s) {
      os << kFieldNames[s] << '=' << opcode_name(static_cast<StageId>(s), w.types[s])
         << ' ';
    }
    char buf[16];
    std::snprintf(buf, sizeof buf, "PARAM=0x%04X", w.op_param);
    os << buf << '\n';
  }
  return os.str();
}

}  // namespace vsaforge::isa
