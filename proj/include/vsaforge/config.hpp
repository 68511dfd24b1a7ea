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
#include <vector>

namespace vsaforge {

/// Per-stage dynamic energy plus per-tile leakage, in abstract units. Only
/// ratios and trends are meaningful; absolute power is out of scope.
struct EnergyWeights {
  std::array<double, 7> stage_dynamic{1.0, 0.8, 0.5, 0.9, 1.2, 0.9, 0.6};
  double leakage_per_tile = 0.55;
};

/// Accelerator instance parameters.
struct AccConfig {
  std::string name = "custom";
  std::uint32_t fold_width = 512;       // W, datapath bits
  std::uint32_t tiles = 4;              // K
  std::uint32_t ca90_rf_regs = 4;       // R
  std::uint32_t bnd_rf_regs = 4;        // B
  std::uint32_t dsum_regs = 4;          // D
  std::uint32_t distance_bits = 12;     // C
  std::uint32_t bnd_bits = 8;           // H
  std::uint64_t memory_capacity = 262144;  // bytes, split evenly across tiles
  std::uint32_t active_tile_mask = 0xFFFFFFFFu;  // low K bits are meaningful
  EnergyWeights energy;

  void validate() const;

  std::uint32_t active_tiles() const;
  /// Indices of active tiles, ascending.
  std::vector<std::uint32_t> active_tile_ids() const;
  std::uint64_t sram_bytes_per_tile() const { return memory_capacity / tiles; }
  /// Fold entries available per tile.
  std::uint32_t sram_slots_per_tile() const {
    return static_cast<std::uint32_t>(sram_bytes_per_tile() / (fold_width / 8));
  }
};

/// Named presets acc2/acc4/acc8. Throws ConfigError for unknown names.
AccConfig preset(const std::string& name);
bool is_preset(const std::string& name);

/// Key-value config file ("key = value" lines, # comments) with the AccConfig
/// field names; unknown keys are errors.
AccConfig parse_config_text(const std::string& text, const std::string& name);
AccConfig load_config_file(const std::string& path);
std::string config_to_text(const AccConfig& cfg);

}  // namespace vsaforge
