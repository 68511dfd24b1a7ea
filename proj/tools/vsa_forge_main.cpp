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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "vsaforge/assembler.hpp"
#include "vsaforge/builder.hpp"
#include "vsaforge/codebook.hpp"
#include "vsaforge/errors.hpp"
#include "vsaforge/machine.hpp"
#include "vsaforge/report.hpp"
#include "vsaforge/schedule.hpp"
#include "vsaforge/serialize.hpp"
#include "vsaforge/workloads.hpp"

namespace fs = std::filesystem;
using namespace vsaforge;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

AccConfig resolve_config(const std::string& name_or_path) {
  if (fs::exists(name_or_path) && fs::is_regular_file(name_or_path))
    return load_config_file(name_or_path);
  if (const char* dir = std::getenv("VSA_FORGE_CONFIG_DIR")) {
    const fs::path candidate = fs::path(dir) / (name_or_path + ".cfg");
    if (fs::exists(candidate)) return load_config_file(candidate.string());
  }
  if (is_preset(name_or_path)) return preset(name_or_path);
  throw IoError("config not found: " + name_or_path +
                " (not a file, preset, or $VSA_FORGE_CONFIG_DIR entry)");
}

std::string read_file(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw IoError("cannot open: " + path);
  std::ostringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw IoError("cannot open for write: " + path);
  os << text;
}

struct RunSpec {
  std::string workload = "fact";
  std::string config = "acc4";
  std::string control = "mopc";
  std::uint64_t seed = 1;
  std::uint32_t dim = 2048;
  std::uint32_t fold_width = 512;
  std::uint32_t factors = 3;
  std::string tiles_mask;
};

// A manifest file serializes one run so it can be reproduced exactly from
// the file alone.
struct Manifest {
  RunSpec rs;
  std::string report;
  std::string trace;
};

Manifest load_manifest(const std::string& path) {
  const auto j = nlohmann::json::parse(read_file(path));
  Manifest m;
  m.rs.workload = j.value("workload", m.rs.workload);
  m.rs.config = j.value("config", m.rs.config);
  m.rs.control = j.value("control", m.rs.control);
  m.rs.seed = j.value("seed", m.rs.seed);
  m.rs.dim = j.value("dim", m.rs.dim);
  m.rs.fold_width = j.value("fold_width", m.rs.fold_width);
  m.rs.factors = j.value("factors", m.rs.factors);
  m.rs.tiles_mask = j.value("tiles_mask", m.rs.tiles_mask);
  m.report = j.value("report", "");
  m.trace = j.value("trace", "");
  return m;
}

wl::WorkloadParams make_params(const RunSpec& rs) {
  wl::WorkloadParams p;
  p.name = rs.workload;
  p.dim = rs.dim;
  p.fold_width = rs.fold_width;
  p.seed = rs.seed;
  p.fact_factors = rs.factors;
  return p;
}

struct RunOutcome {
  sim::RunReport report;
  bool match = false;
};

RunOutcome execute(const AccConfig& cfg, const wl::WorkloadParams& params,
                   const std::string& control, std::ostream* trace) {
  auto built = wl::build_workload(cfg, params);
  auto program = control == "sopc" ? isa::schedule_sopc(built.ops, cfg)
                                   : isa::schedule_mopc(built.ops, cfg);
  auto machine = sim::Machine::load(cfg, std::move(program), std::move(built.image));
  RunOutcome out;
  out.report = machine.run(trace);
  out.match = !out.report.faulted && out.report.result_indices == built.expected;
  return out;
}

AccConfig apply_mask(AccConfig cfg, const std::string& mask) {
  if (!mask.empty()) {
    cfg.active_tile_mask = static_cast<std::uint32_t>(std::stoul(mask, nullptr, 0));
    cfg.validate();
  }
  return cfg;
}

int cmd_run(const RunSpec& rs, const std::string& report_path,
            const std::string& trace_path) {
  const AccConfig cfg = apply_mask(resolve_config(rs.config), rs.tiles_mask);
  if (!wl::is_workload_name(rs.workload)) {
    std::cerr << "unknown workload: " << rs.workload << "\n";
    return kExitUsage;
  }

  std::ofstream trace_file;
  std::ostream* trace = nullptr;
  if (!trace_path.empty()) {
    trace_file.open(trace_path, std::ios::binary);
    if (!trace_file) throw IoError("cannot open trace file: " + trace_path);
    trace = &trace_file;
  }

  const auto outcome = execute(cfg, make_params(rs), rs.control, trace);
  const auto json = report_to_json(outcome.report, outcome.match, rs.workload, rs.seed);
  if (report_path.empty())
    std::cout << json;
  else
    write_file(report_path, json);

  if (outcome.report.faulted) {
    std::cerr << "fault: " << outcome.report.fault_message << "\n";
    return kExitMismatch;
  }
  if (!outcome.match) {
    std::cerr << "oracle mismatch: simulated results differ from the functional"
                 " golden\n";
    return kExitMismatch;
  }
  return kExitOk;
}

int cmd_compare(const std::vector<std::string>& workloads,
                const std::vector<std::string>& configs,
                const std::vector<std::string>& controls,
                const std::vector<std::uint32_t>& factor_list, const RunSpec& base,
                const std::string& out_prefix) {
  std::vector<CompareCell> cells;
  for (const auto& w : workloads) {
    const std::vector<std::uint32_t> factors =
        w == "fact" ? factor_list : std::vector<std::uint32_t>{0};
    for (const auto f : factors) {
      std::uint64_t baseline_cycles = 0;
      for (std::size_t ci = 0; ci < configs.size(); ++ci) {
        const AccConfig cfg = apply_mask(resolve_config(configs[ci]), base.tiles_mask);
        for (std::size_t mi = 0; mi < controls.size(); ++mi) {
          RunSpec rs = base;
          rs.workload = w;
          if (f != 0) rs.factors = f;
          const auto outcome = execute(cfg, make_params(rs), controls[mi], nullptr);
          CompareCell cell;
          cell.workload = w;
          cell.config = configs[ci];
          cell.control = controls[mi];
          cell.factors = f;
          cell.cycles = outcome.report.total_cycles;
          cell.energy = outcome.report.energy_total;
          cell.mean_power = outcome.report.mean_power;
          cell.oracle_match = outcome.match;
          if (ci == 0 && mi == 0) baseline_cycles = cell.cycles;
          cell.speedup = cell.cycles == 0
                             ? 0.0
                             : static_cast<double>(baseline_cycles) /
                                   static_cast<double>(cell.cycles);
          cells.push_back(std::move(cell));
        }
      }
    }
  }
  if (cells.size() < 2) {
    std::cerr << "compare needs a grid of at least 2 cells\n";
    return kExitUsage;
  }
  const auto csv = compare_to_csv(cells);
  std::cout << csv;
  if (!out_prefix.empty()) {
    write_file(out_prefix + ".csv", csv);
    write_file(out_prefix + ".json", compare_to_json(cells));
  }
  for (const auto& c : cells)
    if (!c.oracle_match) return kExitMismatch;
  return kExitOk;
}

int cmd_asm(const std::string& in_path, const std::string& out_path) {
  const auto words = isa::assemble(read_file(in_path));
  isa::Program p;
  p.words = words;
  std::ofstream os(out_path, std::ios::binary);
  if (!os) throw IoError("cannot open for write: " + out_path);
  isa::write_program_words(os, p);
  std::cout << words.size() << " words assembled\n";
  return kExitOk;
}

int cmd_disasm(const std::string& in_path, const std::string& out_path) {
  std::ifstream is(in_path, std::ios::binary);
  if (!is) throw IoError("cannot open: " + in_path);
  const auto raw = isa::read_program_words(is);
  std::vector<isa::InstructionWord> words;
  words.reserve(raw.size());
  for (auto bits : raw) words.push_back(isa::decode_word(bits));
  const auto text = isa::disassemble(words);
  if (out_path.empty())
    std::cout << text;
  else
    write_file(out_path, text);
  return kExitOk;
}

int cmd_gen(const RunSpec& rs, const std::string& out_dir) {
  const AccConfig cfg = apply_mask(resolve_config(rs.config), rs.tiles_mask);
  auto built = wl::build_workload(cfg, make_params(rs));
  fs::create_directories(out_dir);
  for (const auto& cb : built.codebooks)
    write_codebook_file((fs::path(out_dir) / (cb.name() + ".cbnk")).string(), cb);
  for (std::size_t q = 0; q < built.query_vectors.size(); ++q) {
    char name[32];
    std::snprintf(name, sizeof name, "query_%04zu.hvec", q);
    write_hvec_file((fs::path(out_dir) / name).string(), built.query_vectors[q]);
  }
  const auto program = rs.control == "sopc" ? isa::schedule_sopc(built.ops, cfg)
                                            : isa::schedule_mopc(built.ops, cfg);
  write_file((fs::path(out_dir) / "program.asm").string(),
             isa::disassemble(program.words));
  {
    std::ofstream os(fs::path(out_dir) / "program.vsap", std::ios::binary);
    isa::write_program_words(os, program);
  }
  nlohmann::ordered_json golden;
  golden["workload"] = rs.workload;
  golden["seed"] = rs.seed;
  golden["dim"] = rs.dim;
  golden["fold_width"] = rs.fold_width;
  golden["config"] = cfg.name;
  golden["control"] = rs.control;
  golden["expected"] = built.expected;
  write_file((fs::path(out_dir) / "golden.json").string(), golden.dump(2) + "\n");
  std::cout << "workload written to " << out_dir << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"vsa-forge: hypervector kernel library and accelerator simulator"};
  app.require_subcommand(1);

  RunSpec rs;
  std::string report_path, trace_path, out_path, in_path, out_dir, out_prefix;
  std::vector<std::string> workloads{"fact"}, configs{"acc2", "acc4", "acc8"},
      controls{"mopc"};
  std::vector<std::uint32_t> factor_list{3};

  const auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--workload", rs.workload, "mult | tree | fact | react");
    cmd->add_option("--config", rs.config, "preset name or config file path");
    cmd->add_option("--control", rs.control, "sopc | mopc")
        ->check(CLI::IsMember({"sopc", "mopc"}));
    cmd->add_option("--seed", rs.seed, "master random seed");
    cmd->add_option("--dim", rs.dim, "hypervector dimension D");
    cmd->add_option("--fold-width", rs.fold_width, "fold width W");
    cmd->add_option("--factors", rs.factors, "FACT factor count");
    cmd->add_option("--tiles-mask", rs.tiles_mask, "active tile mask, e.g. 0x3");
  };

  std::string manifest_path;
  auto* run = app.add_subcommand("run", "simulate one workload and check the oracle");
  add_common(run);
  run->add_option("--report", report_path, "write the JSON report here");
  run->add_option("--trace", trace_path, "write the cycle trace CSV here");
  run->add_option("--manifest", manifest_path,
                  "JSON manifest; flags given on the command line override it");

  auto* cmp = app.add_subcommand("compare", "sweep configs/controls and emit a table");
  add_common(cmp);
  cmp->add_option("--workloads", workloads, "workloads to sweep")->delimiter(',');
  cmp->add_option("--configs", configs, "configs to sweep")->delimiter(',');
  cmp->add_option("--controls", controls, "control modes to sweep")->delimiter(',');
  cmp->add_option("--factor-sweep", factor_list, "FACT factor counts")->delimiter(',');
  cmp->add_option("--out", out_prefix, "write PREFIX.csv and PREFIX.json");

  auto* asm_cmd = app.add_subcommand("asm", "assemble text into a binary program");
  asm_cmd->add_option("input", in_path, "assembly text file")->required();
  asm_cmd->add_option("--out", out_path, "output .vsap path")->required();

  auto* dis = app.add_subcommand("disasm", "disassemble a binary program");
  dis->add_option("input", in_path, "binary .vsap file")->required();
  dis->add_option("--out", out_path, "output text path (default stdout)");

  auto* gen = app.add_subcommand("gen", "dump a workload: codebooks, program, golden");
  add_common(gen);
  gen->add_option("--out", out_dir, "output directory")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) {
      if (!manifest_path.empty()) {
        const auto m = load_manifest(manifest_path);
        // explicit flags win over manifest values
        const auto overridden = [&](const std::string& name) {
          return run->count(name) > 0;
        };
        if (!overridden("--workload")) rs.workload = m.rs.workload;
        if (!overridden("--config")) rs.config = m.rs.config;
        if (!overridden("--control")) rs.control = m.rs.control;
        if (!overridden("--seed")) rs.seed = m.rs.seed;
        if (!overridden("--dim")) rs.dim = m.rs.dim;
        if (!overridden("--fold-width")) rs.fold_width = m.rs.fold_width;
        if (!overridden("--factors")) rs.factors = m.rs.factors;
        if (!overridden("--tiles-mask")) rs.tiles_mask = m.rs.tiles_mask;
        if (!overridden("--report") && !m.report.empty()) report_path = m.report;
        if (!overridden("--trace") && !m.trace.empty()) trace_path = m.trace;
      }
      return cmd_run(rs, report_path, trace_path);
    }
    if (cmp->parsed())
      return cmd_compare(workloads, configs, controls, factor_list, rs, out_prefix);
    if (asm_cmd->parsed()) return cmd_asm(in_path, out_path);
    if (dis->parsed()) return cmd_disasm(in_path, out_path);
    if (gen->parsed()) return cmd_gen(rs, out_dir);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMismatch;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMismatch;
  }
  return kExitUsage;
}
