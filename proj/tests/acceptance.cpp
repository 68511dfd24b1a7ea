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

// End-to-end acceptance suite. Each criterion prints one PASS/FAIL line with
// its measured numbers; the process exits nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "vsaforge/assembler.hpp"
#include "vsaforge/codebook.hpp"
#include "vsaforge/kernels.hpp"
#include "vsaforge/machine.hpp"
#include "vsaforge/ops.hpp"
#include "vsaforge/rng.hpp"
#include "vsaforge/schedule.hpp"
#include "vsaforge/workloads.hpp"

using namespace vsaforge;

namespace {

int g_failures = 0;

void report(int criterion, bool ok, const std::string& detail) {
  std::printf("%s C%d: %s\n", ok ? "PASS" : "FAIL", criterion, detail.c_str());
  std::fflush(stdout);
  if (!ok) ++g_failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// --- Criterion 1: algebra property suite -----------------------------------

void criterion1() {
  const auto t0 = std::chrono::steady_clock::now();
  const int n = 10000;
  int failures = 0;

  const auto random_dims = [&](std::uint64_t i) {
    // W in {64,128,256,512}, L in 1..8, so D <= 4096
    const std::uint32_t w = 64u << (stream_word(7, i) % 4);
    const std::uint32_t l = 1 + static_cast<std::uint32_t>(stream_word(8, i) % 8);
    return std::pair{w * l, w};
  };

  for (int i = 0; i < n; ++i) {
    const auto [d, w] = random_dims(i);
    const auto a = random_hv(d, w, derive_seed(1001, i));
    const auto b = random_hv(d, w, derive_seed(1002, i));
    if (!(bind(a, bind(a, b)) == b)) ++failures;  // self-inverse
  }
  for (int i = 0; i < n; ++i) {
    const auto [d, w] = random_dims(i + n);
    const auto x = random_hv(d, w, derive_seed(1003, i));
    std::vector<Hypervector> vs;
    const int cnt = 3 + (i % 3) * 2;  // odd counts: 3, 5, 7
    for (int j = 0; j < cnt; ++j) vs.push_back(random_hv(d, w, derive_seed(1004 + j, i)));
    std::vector<Hypervector> bound;
    for (const auto& v : vs) bound.push_back(bind(x, v));
    if (!(bind(x, bundle(vs)) == bundle(bound))) ++failures;  // distributivity
  }
  for (int i = 0; i < n; ++i) {
    const auto [d, w] = random_dims(i + 2 * n);
    const auto a = random_hv(d, w, derive_seed(1005, i));
    const auto b = random_hv(d, w, derive_seed(1006, i));
    const auto h = static_cast<std::int64_t>(hamming(a, b));
    if (dot(a, b).value != static_cast<std::int64_t>(d) - 2 * h) ++failures;
  }
  for (int i = 0; i < n; ++i) {
    const auto [d, w] = random_dims(i + 3 * n);
    const auto a = random_hv(d, w, derive_seed(1007, i));
    const auto b = random_hv(d, w, derive_seed(1008, i));
    const auto j = stream_word(9, i) % (2 * d);
    if (hamming(permute(a, j), permute(b, j)) != hamming(a, b)) ++failures;
    if (!(permute(a, d) == a)) ++failures;
  }
  for (int i = 0; i < n; ++i) {
    const auto [d, w] = random_dims(i + 4 * n);
    const auto a = random_hv(d, w, derive_seed(1009, i));
    const auto b = random_hv(d, w, derive_seed(1010, i));
    // C >= log2(2D)+1 keeps the folded path unsaturated
    if (fold_dot(a, b, 14).value != dot(a, b).value) ++failures;
  }

  const double dt = seconds_since(t0);
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "algebra properties, 5x%d randomized cases, %d failures, %.1fs (<60s)",
                n, failures, dt);
  report(1, failures == 0 && dt < 60.0, buf);
}

// --- Criterion 2: resonator vs exhaustive oracle ---------------------------

void criterion2() {
  const auto t0 = std::chrono::steady_clock::now();
  const int trials = 100;
  int recovered = 0, converged_wrong = 0, converged_cnt = 0;

  for (int t = 0; t < trials; ++t) {
    const std::uint64_t seed = derive_seed(2024, t);
    std::vector<Codebook> books;
    for (int f = 0; f < 3; ++f)
      books.push_back(Codebook::random("b" + std::to_string(f), 13, 2048, 512,
                                       derive_seed(seed, f)));
    Rng rng(derive_seed(seed, 99));
    std::vector<std::uint32_t> truth;
    Hypervector composite;
    for (int f = 0; f < 3; ++f) {
      const auto i = static_cast<std::uint32_t>(rng.next_below(13));
      truth.push_back(i);
      composite = f == 0 ? books[f].item(i) : bind(composite, books[f].item(i));
    }

    // exhaustive 2197-combination oracle with uniqueness check
    std::vector<std::vector<std::uint32_t>> matches;
    for (std::uint32_t i = 0; i < 13; ++i) {
      const auto vi = books[0].item(i);
      for (std::uint32_t j = 0; j < 13; ++j) {
        const auto vij = bind(vi, books[1].item(j));
        for (std::uint32_t k = 0; k < 13; ++k)
          if (bind(vij, books[2].item(k)) == composite) matches.push_back({i, j, k});
      }
    }
    const bool unique = matches.size() == 1;
    if (!unique) std::printf("  note: non-unique factorization at trial %d\n", t);

    const auto res = resonator_factorize(composite, books, {60, Precision{8, 12}, true});
    const bool correct = unique && res.factor_indices == matches[0];
    if (correct) ++recovered;
    if (res.converged) {
      ++converged_cnt;
      if (unique && !correct) ++converged_wrong;
    }
  }

  const double dt = seconds_since(t0);
  char buf[200];
  std::snprintf(buf, sizeof buf,
                "resonator: %d/%d recovered (>=95), %d converged, %d converged-and-wrong "
                "(=0), %.1fs (<300s)",
                recovered, trials, converged_cnt, converged_wrong, dt);
  report(2, recovered >= 95 && converged_wrong == 0 && dt < 300.0, buf);
}

// --- Criterion 3: simulator equals the functional oracle -------------------

struct CellResult {
  std::uint64_t cycles;
  double energy;
  double power;
  bool match;
};

CellResult run_cell(const std::string& cname, const wl::WorkloadParams& params,
                    isa::ControlMode mode) {
  const auto cfg = preset(cname);
  const auto built = wl::build_workload(cfg, params);
  auto program = mode == isa::ControlMode::kSopc ? isa::schedule_sopc(built.ops, cfg)
                                                 : isa::schedule_mopc(built.ops, cfg);
  auto m = sim::Machine::load(cfg, std::move(program), built.image);
  const auto r = m.run();
  return {r.total_cycles, r.energy_total, r.mean_power,
          !r.faulted && r.result_indices == built.expected};
}

void criterion3() {
  const auto t0 = std::chrono::steady_clock::now();
  bool all = true;
  std::string bad;
  for (const auto* w : {"mult", "tree", "fact", "react"}) {
    wl::WorkloadParams params;
    params.name = w;
    params.seed = 42;
    for (const auto* c : {"acc2", "acc4", "acc8"}) {
      for (const auto mode : {isa::ControlMode::kSopc, isa::ControlMode::kMopc}) {
        const auto cell = run_cell(c, params, mode);
        if (!cell.match) {
          all = false;
          bad += std::string(" ") + w + "/" + c + "/" +
                 std::string(isa::control_mode_name(mode));
        }
      }
    }
  }
  const double dt = seconds_since(t0);
  char buf[240];
  if (all)
    std::snprintf(buf, sizeof buf,
                  "simulator results bit-identical to the functional oracle over 4 "
                  "workloads x 3 configs x 2 modes, %.1fs (<600s)",
                  dt);
  else
    std::snprintf(buf, sizeof buf, "oracle mismatches:%s, %.1fs", bad.c_str(), dt);
  report(3, all && dt < 600.0, buf);
}

// --- Criteria 4 and 5: MOPC speedup and power trends ------------------------

void criteria45() {
  std::vector<double> speedups, power_incr;
  bool energy_ok = true;
  for (std::uint32_t f = 3; f <= 6; ++f) {
    wl::WorkloadParams params;
    params.name = "fact";
    params.seed = 42;
    params.fact_factors = f;
    const auto s = run_cell("acc4", params, isa::ControlMode::kSopc);
    const auto m = run_cell("acc4", params, isa::ControlMode::kMopc);
    speedups.push_back(static_cast<double>(s.cycles) / static_cast<double>(m.cycles));
    power_incr.push_back(m.power / s.power - 1.0);
    if (m.energy > s.energy) energy_ok = false;
  }

  bool monotone = true, in_band = true;
  for (std::size_t i = 0; i < speedups.size(); ++i) {
    if (i > 0 && speedups[i] < speedups[i - 1] - 1e-9) monotone = false;
    if (speedups[i] < 1.5 || speedups[i] > 2.5) in_band = false;
  }
  char buf[220];
  std::snprintf(buf, sizeof buf,
                "MOPC speedup over factors 3..6: %.2f %.2f %.2f %.2f (monotone, in "
                "[1.5,2.5])",
                speedups[0], speedups[1], speedups[2], speedups[3]);
  report(4, monotone && in_band, buf);

  bool power_band = true;
  for (double p : power_incr)
    if (p < 0.30 || p > 0.70) power_band = false;
  std::snprintf(buf, sizeof buf,
                "MOPC power +%.0f%%..+%.0f%% (in [30%%,70%%]), MOPC energy <= SOPC: %s",
                power_incr.front() * 100, power_incr.back() * 100,
                energy_ok ? "yes" : "no");
  report(5, power_band && energy_ok, buf);
}

// --- Criterion 6: tile-scaling trends ---------------------------------------

void criterion6() {
  bool band_ok = true;
  std::string detail;
  double mult_gain8 = 0, react_gain8 = 0;
  for (const auto* w : {"mult", "tree", "fact", "react"}) {
    wl::WorkloadParams params;
    params.name = w;
    params.seed = 42;
    const auto c2 = run_cell("acc2", params, isa::ControlMode::kMopc);
    const auto c4 = run_cell("acc4", params, isa::ControlMode::kMopc);
    const auto c8 = run_cell("acc8", params, isa::ControlMode::kMopc);
    const double r24 = static_cast<double>(c2.cycles) / static_cast<double>(c4.cycles);
    const double r48 = static_cast<double>(c4.cycles) / static_cast<double>(c8.cycles);
    if (r24 < 1.2 || r24 > 2.0) band_ok = false;
    char one[48];
    std::snprintf(one, sizeof one, "%s=%.2f ", w, r24);
    detail += one;
    if (std::string(w) == "mult") mult_gain8 = r48;
    if (std::string(w) == "react") react_gain8 = r48;
  }
  const bool order_ok = react_gain8 > mult_gain8;
  char buf[240];
  std::snprintf(buf, sizeof buf,
                "acc4-vs-acc2 speedups %s(in [1.2,2.0]); acc8-vs-acc4 react %.2f > mult "
                "%.2f: %s",
                detail.c_str(), react_gain8, mult_gain8, order_ok ? "yes" : "no");
  report(6, band_ok && order_ok, buf);
}

// --- Criterion 7: codebook compression --------------------------------------

void criterion7() {
  bool ok = true;
  for (const auto& [n, d, w] : std::vector<std::tuple<int, int, int>>{
           {120, 2048, 512}, {13, 512, 512}, {55, 4096, 512}, {9, 1024, 128}}) {
    const auto cb = Codebook::random("c", n, d, w, 3);
    const auto l = static_cast<std::uint64_t>(d / w);
    if (cb.footprint(false) != cb.footprint(true) * l) ok = false;
  }
  const auto cb = Codebook::random("c", 120, 2048, 512, 4);
  const bool ratio4 = cb.footprint(false) / cb.footprint(true) == 4;
  report(7, ok && ratio4,
         "footprint ratio equals fold count on all shapes; D=2048,W=512 ratio = 4");
}

// --- Criterion 8: ISA round-trips and hazard-free schedules -----------------

std::vector<isa::PrimitiveOp> random_stream(Rng& rng, const AccConfig& cfg,
                                            std::size_t n) {
  std::vector<isa::PrimitiveOp> ops;
  const auto reg = [&](std::uint32_t bound) {
    return static_cast<std::uint8_t>(rng.next_below(bound));
  };
  for (std::size_t i = 0; i < n; ++i) {
    switch (rng.next_below(13)) {
      case 0: ops.push_back(isa::seed_to_rf(static_cast<std::uint16_t>(rng.next_below(32)), reg(cfg.ca90_rf_regs))); break;
      case 1: ops.push_back(isa::seed_to_rf_n(static_cast<std::uint16_t>(rng.next_below(32)), reg(cfg.ca90_rf_regs), reg(8))); break;
      case 2: ops.push_back(isa::rf_pop(reg(cfg.ca90_rf_regs), rng.next() & 1, reg(8), reg(cfg.dsum_regs), rng.next() & 1)); break;
      case 3: ops.push_back(isa::seed_pop(static_cast<std::uint16_t>(rng.next_below(32)), reg(cfg.ca90_rf_regs), reg(cfg.dsum_regs), rng.next() & 1)); break;
      case 4: ops.push_back(isa::mem_pop(static_cast<std::uint16_t>(rng.next_below(32)), reg(8), reg(cfg.dsum_regs), rng.next() & 1)); break;
      case 5: ops.push_back(isa::qry_load(static_cast<std::uint16_t>(rng.next_below(32)), reg(8))); break;
      case 6: ops.push_back(isa::mem_to_bb(static_cast<std::uint16_t>(rng.next_below(32)), rng.next() & 1)); break;
      case 7: ops.push_back(isa::rf_cvt_acc(reg(cfg.ca90_rf_regs), rng.next() & 1, reg(cfg.bnd_rf_regs), rng.next() & 1, rng.next() & 1)); break;
      case 8: ops.push_back(isa::sgn_store(reg(cfg.bnd_rf_regs), static_cast<std::uint16_t>(rng.next_below(32)))); break;
      case 9: ops.push_back(isa::amax(static_cast<std::uint16_t>(rng.next_below(32)), reg(cfg.dsum_regs))); break;
      case 10: ops.push_back(isa::shf_bind(reg(cfg.ca90_rf_regs), reg(cfg.ca90_rf_regs), reg(8), rng.next() & 1)); break;
      case 11: ops.push_back(isa::bnd_target(reg(cfg.bnd_rf_regs))); break;
      default: ops.push_back(isa::rf_muld_acct(reg(cfg.ca90_rf_regs), rng.next() & 1, reg(cfg.dsum_regs), reg(cfg.tiles), rng.next() & 1)); break;
    }
  }
  return ops;
}

void criterion8() {
  const auto t0 = std::chrono::steady_clock::now();
  Rng rng(0xACCE55);

  // encode/decode identity over 1e5 random valid words
  int word_fail = 0;
  std::vector<isa::InstructionWord> words;
  words.reserve(100000);
  for (int i = 0; i < 100000; ++i) {
    isa::InstructionWord w;
    for (int s = 0; s < isa::kNumStages; ++s)
      w.types[s] = static_cast<std::uint8_t>(rng.next_below(
          isa::stage_max_opcode(static_cast<isa::StageId>(s)) + 1));
    w.op_param = static_cast<std::uint16_t>(rng.next_below(0x10000));
    if (!(isa::decode_word(isa::encode_word(w)) == w)) ++word_fail;
    words.push_back(w);
  }

  // assemble/disassemble identity over the same words
  int asm_fail = 0;
  for (std::size_t base = 0; base < words.size(); base += 10000) {
    const std::vector<isa::InstructionWord> chunk(
        words.begin() + base, words.begin() + std::min(words.size(), base + 10000));
    if (!(isa::assemble(isa::disassemble(chunk)) == chunk)) ++asm_fail;
  }

  // hazard validator over 1e4 random MOPC schedules
  int sched_fail = 0, shorter_fail = 0;
  for (int t = 0; t < 10000; ++t) {
    const auto cfg = preset(t % 3 == 0 ? "acc2" : (t % 3 == 1 ? "acc4" : "acc8"));
    const auto ops = random_stream(rng, cfg, 1 + rng.next_below(64));
    const auto m = isa::schedule_mopc(ops, cfg);
    if (!isa::validate(m, cfg).empty()) ++sched_fail;
    if (m.words.size() > isa::schedule_sopc(ops, cfg).words.size()) ++shorter_fail;
  }

  const double dt = seconds_since(t0);
  char buf[220];
  std::snprintf(buf, sizeof buf,
                "ISA: 1e5 word round-trips (%d bad), asm round-trips (%d bad), 1e4 MOPC "
                "schedules (%d violations, %d longer than SOPC), %.1fs",
                word_fail, asm_fail, sched_fail, shorter_fail, dt);
  report(8, word_fail == 0 && asm_fail == 0 && sched_fail == 0 && shorter_fail == 0,
         buf);
}

}  // namespace

int main() {
  std::printf("vsa-forge acceptance suite\n");
  criterion1();
  criterion2();
  criterion3();
  criteria45();
  criterion6();
  criterion7();
  criterion8();
  std::printf("%s (%d criterion failures)\n", g_failures == 0 ? "ALL PASS" : "FAILED",
              g_failures);
  return g_failures == 0 ? 0 : 1;
}
