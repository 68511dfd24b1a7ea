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

#include <sstream>

#include "doctest.h"
#include "vsaforge/assembler.hpp"
#include "vsaforge/config.hpp"
#include "vsaforge/errors.hpp"
#include "vsaforge/rng.hpp"
#include "vsaforge/schedule.hpp"

using namespace vsaforge;
using namespace vsaforge::isa;

namespace {

InstructionWord random_valid_word(Rng& rng) {
  InstructionWord w;
  for (int s = 0; s < kNumStages; ++s)
    w.types[s] = static_cast<std::uint8_t>(
        rng.next_below(stage_max_opcode(static_cast<StageId>(s)) + 1));
  w.op_param = static_cast<std::uint16_t>(rng.next_below(0x10000));
  return w;
}

// a random but executable-looking op stream against a small config
std::vector<PrimitiveOp> random_ops(Rng& rng, const AccConfig& cfg, std::size_t n) {
  std::vector<PrimitiveOp> ops;
  const auto reg = [&](std::uint32_t bound) {
    return static_cast<std::uint8_t>(rng.next_below(bound));
  };
  const auto slot = [&] {
    return static_cast<std::uint16_t>(rng.next_below(16));
  };
  for (std::size_t i = 0; i < n; ++i) {
    switch (rng.next_below(12)) {
      case 0: ops.push_back(seed_to_rf(slot(), reg(cfg.ca90_rf_regs))); break;
      case 1:
        ops.push_back(rf_pop(reg(cfg.ca90_rf_regs), rng.next() & 1, reg(8),
                             reg(cfg.dsum_regs), rng.next() & 1));
        break;
      case 2: ops.push_back(mem_pop(slot(), reg(8), reg(cfg.dsum_regs), rng.next() & 1)); break;
      case 3: ops.push_back(qry_load(slot(), reg(8))); break;
      case 4: ops.push_back(mem_to_bb(slot(), rng.next() & 1)); break;
      case 5: ops.push_back(rf_to_bb(reg(cfg.ca90_rf_regs), rng.next() & 1, rng.next() & 1)); break;
      case 6:
        ops.push_back(rf_cvt_acc(reg(cfg.ca90_rf_regs), rng.next() & 1,
                                 reg(cfg.bnd_rf_regs), rng.next() & 1, rng.next() & 1));
        break;
      case 7: ops.push_back(sgn_store(reg(cfg.bnd_rf_regs), slot())); break;
      case 8: ops.push_back(bb_store(slot())); break;
      case 9: ops.push_back(amax(slot(), reg(cfg.dsum_regs))); break;
      case 10: ops.push_back(bnd_target(reg(cfg.bnd_rf_regs))); break;
      default:
        ops.push_back(rf_muli_acc(reg(cfg.ca90_rf_regs), rng.next() & 1,
                                  reg(cfg.bnd_rf_regs), rng.next() & 1,
                                  static_cast<std::int8_t>(rng.next_below(255)) ));
        break;
    }
  }
  return ops;
}

}  // namespace

TEST_CASE("word encode/decode round-trip") {
  InstructionWord nop;
  CHECK(encode_word(nop) == 0);
  CHECK(decode_word(0) == nop);

  Rng rng(11);
  for (int i = 0; i < 20000; ++i) {
    const auto w = random_valid_word(rng);
    CHECK(decode_word(encode_word(w)) == w);
  }
}

TEST_CASE("decode rejects reserved bits and unknown opcodes") {
  CHECK_THROWS_AS(decode_word(std::uint64_t{1} << 63), ParseError);
  CHECK_THROWS_AS(decode_word(std::uint64_t{1} << 44), ParseError);
  // opcode 15 is unknown in every stage
  CHECK_THROWS_AS(decode_word(0xF), ParseError);
}

TEST_CASE("assembler round-trips and reports errors with line numbers") {
  const std::string nop_line =
      "MEM=NOP GEN=NOP BIND=NOP MUL=NOP BND=NOP SGN=NOP DC=NOP PARAM=0x0000\n";
  const auto words = assemble(nop_line);
  REQUIRE(words.size() == 1);
  CHECK(words[0].all_nop());
  CHECK(encode_word(words[0]) == 0);

  // case-insensitive mnemonics and comments
  const auto w2 = assemble("# comment line\nmem=rd gen=step bind=nop mul=nop bnd=nop "
                           "sgn=pop dc=dacc param=0x01a3\n");
  REQUIRE(w2.size() == 1);
  CHECK(w2[0].types[0] == op::kMemRd);
  CHECK(w2[0].types[1] == op::kGenStep);
  CHECK(w2[0].op_param == 0x01A3);

  CHECK(assemble(disassemble(w2)) == w2);

  try {
    assemble(nop_line + "MEM=NOP GEN=NOP BIND=NOP MUL=NOP BND=BOGUS SGN=NOP DC=NOP "
                        "PARAM=0x0000\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(std::string(e.what()).find("BOGUS") != std::string::npos);
    CHECK(std::string(e.what()).find("BND") != std::string::npos);
  }

  CHECK(assemble("").empty());
}

TEST_CASE("assembler round-trips random scheduled programs") {
  Rng rng(21);
  const auto cfg = preset("acc4");
  const auto ops = random_ops(rng, cfg, 60);
  const auto prog = schedule_mopc(ops, cfg);
  const auto text = disassemble(prog.words);
  CHECK(assemble(text) == prog.words);
}

TEST_CASE("param pack/unpack is invertible for every kind") {
  Rng rng(31);
  const auto cfg = preset("acc8");
  auto ops = random_ops(rng, cfg, 300);
  ops.push_back(shf_bind(1, 2, 3, false));
  ops.push_back(rf_muld_acct(0, true, 1, 2, false));
  ops.push_back(seed_to_rf_striped(9, 1, 2));
  ops.push_back(qry_load_bcast(4, 2, 1));
  ops.push_back(mem_to_bb_bcast(7, 3, true));
  ops.push_back(mem_cvt_acc_bcast(8, 2, 1, false));
  ops.push_back(sgn_store_owned(1, 5, 3));
  ops.push_back(bb_store_owned(6, 2));
  ops.push_back(afin());
  ops.push_back(rf_step(2));
  for (const auto& op : ops) {
    auto copy = op;
    copy.slot = 0;
    copy.rf = copy.rf2 = copy.qreg = copy.dreg = copy.bnd = copy.owner = copy.exp = 0;
    copy.imm = 0;
    copy.unpack_param(op.pack_param());
    CHECK(copy == op);
  }
}

TEST_CASE("SOPC expands one word per path stage") {
  const auto cfg = preset("acc2");
  std::vector<PrimitiveOp> ops;
  CHECK(schedule_sopc(ops, cfg).words.empty());

  ops.push_back(mem_pop(0, 0, 0, true));  // 3-stage path
  auto p1 = schedule_sopc(ops, cfg);
  CHECK(p1.words.size() == 3);
  for (const auto& w : p1.words) {
    int active = 0;
    for (auto t : w.types) active += t != 0;
    CHECK(active == 1);
  }

  for (int i = 0; i < 4; ++i) ops.push_back(mem_pop(0, 0, 0, true));
  CHECK(schedule_sopc(ops, cfg).words.size() == 15);
  CHECK(validate(schedule_sopc(ops, cfg), cfg).empty());
}

TEST_CASE("MOPC pipelines independent ops") {
  const auto cfg = preset("acc4");
  // independent pops on distinct registers: full overlap
  std::vector<PrimitiveOp> ops;
  ops.push_back(seed_to_rf(0, 0));
  ops.push_back(seed_to_rf(1, 1));
  ops.push_back(seed_to_rf(2, 2));
  const auto p = schedule_mopc(ops, cfg);
  CHECK(p.words.size() == 4);  // 2-stage paths issuing back to back
  CHECK(validate(p, cfg).empty());

  // single op: identical to SOPC
  std::vector<PrimitiveOp> one{mem_pop(3, 0, 1, true)};
  CHECK(schedule_mopc(one, cfg).words == schedule_sopc(one, cfg).words);
}

TEST_CASE("MOPC honors data hazards on the bundling register file") {
  const auto cfg = preset("acc2");
  std::vector<PrimitiveOp> ops;
  // writer: CVT+SET into BND[0] (BND stage at offset 2 of its path)
  ops.push_back(rf_cvt_acc(0, false, 0, true, false));
  // reader/writer: ACC on BND[0]
  ops.push_back(rf_cvt_acc(1, false, 0, false, false));
  const auto p = schedule_mopc(ops, cfg);
  REQUIRE(validate(p, cfg).empty());
  // second op's BND stage must land strictly after the first's
  const auto bnd_cycle = [&](std::size_t i) {
    return p.issue_cycle[i] + p.ops[i].path_length() - 1;
  };
  CHECK(bnd_cycle(1) >= bnd_cycle(0) + 1);
}

TEST_CASE("MOPC never exceeds the SOPC word count") {
  Rng rng(41);
  for (int trial = 0; trial < 60; ++trial) {
    const auto cfg = preset(trial % 2 ? "acc2" : "acc8");
    const auto ops = random_ops(rng, cfg, 1 + rng.next_below(200));
    const auto s = schedule_sopc(ops, cfg);
    const auto m = schedule_mopc(ops, cfg);
    CHECK(m.words.size() <= s.words.size());
    CHECK(validate(s, cfg).empty());
    CHECK(validate(m, cfg).empty());
  }
}

TEST_CASE("validator flags hand-built hazards") {
  const auto cfg = preset("acc2");

  // two writers of DSUM[1] in the same cycle
  {
    std::vector<PrimitiveOp> ops;
    ops.push_back(mem_pop(0, 0, 1, true));   // DSET d=1, path MEM,SGN,DC
    ops.push_back(mem_pop(1, 0, 1, true));
    auto p = schedule_sopc(ops, cfg);
    // force overlap: move the second op onto the first (same DC cycle)
    p.mode = ControlMode::kMopc;
    p.issue_cycle[1] = p.issue_cycle[0];
    const auto errs = validate(p, cfg);
    CHECK(!errs.empty());
  }

  // register index out of range: B = 2 on acc2
  {
    std::vector<PrimitiveOp> ops{rf_cvt_acc(0, false, 2, true, false)};
    const auto p = schedule_sopc(ops, cfg);
    const auto errs = validate(p, cfg);
    REQUIRE(!errs.empty());
    CHECK(errs.front().find("BND_RF") != std::string::npos);
  }
}

TEST_CASE("program container round-trips") {
  Rng rng(51);
  const auto cfg = preset("acc4");
  const auto prog = schedule_mopc(random_ops(rng, cfg, 40), cfg);
  std::stringstream ss;
  write_program_words(ss, prog);
  const auto raw = read_program_words(ss);
  REQUIRE(raw.size() == prog.words.size());
  for (std::size_t i = 0; i < raw.size(); ++i)
    CHECK(decode_word(raw[i]) == prog.words[i]);
}

TEST_CASE("config files parse and round-trip") {
  const auto acc4 = preset("acc4");
  const auto back = parse_config_text(config_to_text(acc4), "acc4");
  CHECK(back.fold_width == acc4.fold_width);
  CHECK(back.tiles == acc4.tiles);
  CHECK(back.ca90_rf_regs == acc4.ca90_rf_regs);
  CHECK(back.bnd_rf_regs == acc4.bnd_rf_regs);
  CHECK(back.dsum_regs == acc4.dsum_regs);
  CHECK(back.distance_bits == acc4.distance_bits);
  CHECK(back.bnd_bits == acc4.bnd_bits);
  CHECK(back.memory_capacity == acc4.memory_capacity);

  CHECK_THROWS_AS(parse_config_text("bogus_key = 1\n", "x"), ParseError);
  CHECK_THROWS_AS(parse_config_text("tiles", "x"), ParseError);
  CHECK_THROWS_AS(preset("acc16"), ConfigError);
  CHECK(is_preset("acc2"));
  CHECK_FALSE(is_preset("acc3"));
}

TEST_CASE("target-latch ops execute in issue order under MOPC") {
  // A later-issued TGT must not retarget an earlier-issued accumulate whose
  // BND stage would otherwise land after it.
  const auto cfg = preset("acc4");
  std::vector<PrimitiveOp> ops;
  ops.push_back(bnd_target(0));
  ops.push_back(rf_muld_acct(0, false, 0, 0, true));   // BND stage at issue+2
  ops.push_back(bnd_target(1));                        // single-stage BND op
  ops.push_back(rf_muld_acct(1, false, 1, 0, true));
  const auto p = schedule_mopc(ops, cfg);
  REQUIRE(validate(p, cfg).empty());
  // the first ACCT's BND stage precedes the second TGT's write
  const auto bnd_cycle_1 = p.issue_cycle[1] + p.ops[1].path_length() - 1;
  const auto tgt_cycle_2 = p.issue_cycle[2];
  CHECK(bnd_cycle_1 < tgt_cycle_2);
}
