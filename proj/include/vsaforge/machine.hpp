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
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "vsaforge/config.hpp"
#include "vsaforge/schedule.hpp"
#include "vsaforge/types.hpp"

namespace vsaforge::sim {

/// How a region's entries map onto tiles.
///   kReplicated:  every active tile holds every entry at the same slot.
///   kDistributed: vector v lives on active tile v mod A (round-robin), its
///                 folds contiguous; scans parallelize across tiles.
///   kStriped:     fold f of vector v lives on active tile f mod A at a
///                 uniform slot; one op advances all folds at once.
enum class Placement : std::uint8_t { kReplicated, kDistributed, kStriped };

/// A named block of SRAM contents. `data` holds vec-major fold entries
/// (vec_folds per vector; 1 for CA seeds). A region with reserve_vectors > 0
/// and no data reserves writable scratch space instead.
struct Region {
  std::string name;
  Placement placement = Placement::kReplicated;
  std::uint32_t vec_folds = 1;
  std::vector<Fold> data;
  std::uint32_t reserve_vectors = 0;

  std::uint32_t num_vectors() const {
    return data.empty() ? reserve_vectors
                        : static_cast<std::uint32_t>(data.size() / vec_folds);
  }
};

struct LoadImage {
  std::vector<Region> regions;
};

/// Slot geometry of one region after layout: uniform base and height across
/// tiles. `stride` is slots per vector (distributed/striped) in tile-local
/// terms.
struct RegionLayout {
  Placement placement;
  std::uint32_t base = 0;
  std::uint32_t height = 0;
  std::uint32_t stride = 1;
  std::uint32_t vec_folds = 1;
  std::uint32_t vectors = 0;
};

struct ImageLayout {
  std::map<std::string, RegionLayout> regions;
  std::uint32_t total_height = 0;

  const RegionLayout& at(const std::string& name) const;
};

/// Computes slot assignments for an image on a config. Throws ConfigError if
/// the per-tile SRAM capacity is exceeded.
ImageLayout compute_layout(const AccConfig& cfg, const LoadImage& image);

struct TileState {
  std::vector<Fold> sram;
  std::vector<std::uint8_t> sram_valid;
  std::vector<Fold> ca90_rf;
  std::vector<std::uint8_t> rf_valid;
  std::array<Fold, 8> qry;
  Fold bind_buf;
  std::vector<std::vector<std::int32_t>> bnd_rf;  // B regs x W lanes
  std::vector<std::int64_t> dsum;
  std::vector<std::uint8_t> dsum_valid;
  std::int64_t amax_best = 0;
  std::uint32_t amax_index = 0;
  bool amax_any = false;
};

struct StageActivity {
  std::uint32_t tile;
  std::uint8_t stage;
  std::uint8_t opcode;
  double energy;
};

struct CycleTrace {
  std::uint64_t cycle = 0;
  std::vector<StageActivity> active;
  double energy_delta = 0;  // leakage plus all dynamic activity this cycle
};

struct RunReport {
  std::string config_name;
  std::string control_mode;
  std::uint64_t total_cycles = 0;
  std::uint64_t words_executed = 0;
  std::array<double, 7> utilization{};
  double energy_total = 0;
  double mean_power = 0;
  std::vector<std::uint32_t> result_indices;
  std::uint64_t results_digest = 0;
  bool dsum_saturated = false;
  bool faulted = false;
  std::string fault_message;
};

inline constexpr std::string_view kTraceHeader = "cycle,tile,stage,opcode,energy_delta";

/// Deterministic cycle-level model of the multi-tile accelerator. One
/// instruction word issues per cycle; every unit has single-cycle latency;
/// all active tiles execute each stage op in SIMD on their local state.
class Machine {
 public:
  /// Validates the program against the config, lays out the image, and
  /// initializes SRAM. Throws on capacity or validation failures.
  static Machine load(const AccConfig& cfg, isa::Program program, LoadImage image);

  bool finished() const { return cycle_ >= program_.words.size() || faulted_; }
  bool faulted() const { return faulted_; }
  std::uint64_t cycle() const { return cycle_; }

  /// Executes the current word as stage-ordered micro-steps and advances the
  /// cycle counter. Malformed words halt the machine in a fault state.
  CycleTrace step();

  /// Steps to completion, optionally streaming the trace as CSV rows.
  RunReport run(std::ostream* trace = nullptr);

  const std::vector<std::uint32_t>& results() const { return results_; }
  const TileState& tile(std::uint32_t t) const { return tiles_[t]; }
  const ImageLayout& layout() const { return layout_; }
  const AccConfig& config() const { return cfg_; }

  /// FNV-1a digest of all architectural state; used by schedule-equivalence
  /// tests.
  std::uint64_t state_digest() const;

  /// Fault-injection hook for verification: overwrites one fetched word so
  /// the runtime decode/cross-check path can be exercised.
  void inject_word(std::size_t index, isa::InstructionWord w);

 private:
  struct Token {
    Fold fold;
    std::vector<std::int32_t> lanes;
    std::int64_t score = 0;
  };
  struct InFlight {
    std::size_t op_index;
    int path_pos;
    std::vector<Token> tokens;        // one per tile
    std::vector<std::uint8_t> active; // predication mask per tile
  };

  void exec_stage(InFlight& fl, isa::StageId stage, std::uint8_t code,
                  CycleTrace& trace);
  std::uint32_t active_pos(std::uint32_t tile) const;  // rank within active set

  AccConfig cfg_;
  isa::Program program_;
  ImageLayout layout_;
  std::vector<TileState> tiles_;
  std::vector<std::uint32_t> active_ids_;
  std::uint8_t bnd_target_ = 0;
  std::vector<std::uint32_t> results_;
  std::vector<InFlight> inflight_;
  std::size_t next_op_ = 0;
  std::uint64_t cycle_ = 0;
  std::array<std::uint64_t, 7> stage_active_cycles_{};
  double energy_total_ = 0;
  bool dsum_saturated_ = false;
  bool faulted_ = false;
  std::string fault_message_;
};

/// Runs a nearest-neighbor scan for `query` over `items` on a throwaway
/// machine built from cfg, returning the winning index (and the report via
/// out-param when requested). Items are stored vectors distributed
/// round-robin; the result equals the functional nn_search oracle.
std::size_t distance_pipeline(const AccConfig& cfg,
                              const std::vector<Hypervector>& items,
                              const Hypervector& query,
                              RunReport* report_out = nullptr);

}  // namespace vsaforge::sim
