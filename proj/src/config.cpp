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

#include "vsaforge/config.hpp"

#include <bit>
#include <fstream>
#include <sstream>

#include "vsaforge/errors.hpp"

namespace vsaforge {

void AccConfig::validate() const {
  if (fold_width == 0 || fold_width % 8 != 0)
    throw ConfigError("fold_width must be a positive multiple of 8");
  if (tiles == 0 || tiles > 32) throw ConfigError("tiles must be in 1..32");
  if (ca90_rf_regs == 0 || ca90_rf_regs > 8)
    throw ConfigError("ca90_rf_regs must be in 1..8");
  if (bnd_rf_regs == 0 || bnd_rf_regs > 8)
    throw ConfigError("bnd_rf_regs must be in 1..8");
  if (dsum_regs == 0 || dsum_regs > 8) throw ConfigError("dsum_regs must be in 1..8");
  if (distance_bits < 2 || distance_bits > 32)
    throw ConfigError("distance_bits out of range");
  if (bnd_bits < 2 || bnd_bits > 32) throw ConfigError("bnd_bits out of range");
  if (memory_capacity == 0 || memory_capacity % tiles != 0)
    throw ConfigError("memory_capacity must be a positive multiple of tiles");
  if (active_tiles() == 0) throw ConfigError("active tile mask selects no tiles");
  if (energy.leakage_per_tile < 0) throw ConfigError("negative leakage weight");
  for (double w : energy.stage_dynamic)
    if (w < 0) throw ConfigError("negative stage energy weight");
}

std::uint32_t AccConfig::active_tiles() const {
  const std::uint32_t mask = active_tile_mask & ((tiles >= 32) ? ~0u : ((1u << tiles) - 1));
  return static_cast<std::uint32_t>(std::popcount(mask));
}

std::vector<std::uint32_t> AccConfig::active_tile_ids() const {
  std::vector<std::uint32_t> ids;
  for (std::uint32_t t = 0; t < tiles; ++t)
    if (active_tile_mask & (1u << t)) ids.push_back(t);
  return ids;
}

AccConfig preset(const std::string& name) {
  AccConfig c;
  c.name = name;
  if (name == "acc2") {
    c.fold_width = 512; c.tiles = 2; c.ca90_rf_regs = 2; c.bnd_rf_regs = 2;
    c.dsum_regs = 2; c.distance_bits = 12; c.bnd_bits = 8;
    c.memory_capacity = 128 * 1024;
  } else if (name == "acc4") {
    c.fold_width = 512; c.tiles = 4; c.ca90_rf_regs = 4; c.bnd_rf_regs = 4;
    c.dsum_regs = 4; c.distance_bits = 12; c.bnd_bits = 8;
    c.memory_capacity = 256 * 1024;
  } else if (name == "acc8") {
    c.fold_width = 512; c.tiles = 8; c.ca90_rf_regs = 8; c.bnd_rf_regs = 8;
    c.dsum_regs = 8; c.distance_bits = 12; c.bnd_bits = 8;
    c.memory_capacity = 512 * 1024;
  } else {
    throw ConfigError("unknown config preset: " + name);
  }
  return c;
}

bool is_preset(const std::string& name) {
  return name == "acc2" || name == "acc4" || name == "acc8";
}

AccConfig parse_config_text(const std::string& text, const std::string& name) {
  AccConfig c;
  c.name = name;
  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto eq = line.find('=');
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (eq == std::string::npos) throw ParseError("expected key = value", lineno);
    auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r");
      const auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    const std::string key = trim(line.substr(0, eq));
    const std::string val = trim(line.substr(eq + 1));
    try {
      if (key == "fold_width") c.fold_width = static_cast<std::uint32_t>(std::stoul(val));
      else if (key == "tiles") c.tiles = static_cast<std::uint32_t>(std::stoul(val));
      else if (key == "ca90_rf_regs") c.ca90_rf_regs = static_cast<std::uint32_t>(std::stoul(val));
      else if (key == "bnd_rf_regs") c.bnd_rf_regs = static_cast<std::uint32_t>(std::stoul(val));
      else if (key == "dsum_regs") c.dsum_regs = static_cast<std::uint32_t>(std::stoul(val));
      else if (key == "distance_bits") c.distance_bits = static_cast<std::uint32_t>(std::stoul(val));
      else if (key == "bnd_bits") c.bnd_bits = static_cast<std::uint32_t>(std::stoul(val));
      else if (key == "memory_capacity") c.memory_capacity = std::stoull(val);
      else if (key == "active_tile_mask") c.active_tile_mask = static_cast<std::uint32_t>(std::stoul(val, nullptr, 0));
      else if (key == "leakage_per_tile") c.energy.leakage_per_tile = std::stod(val);
      else if (key.rfind("stage_dynamic_", 0) == 0) {
        const int s = std::stoi(key.substr(14));
        if (s < 1 || s > 7) throw ParseError("stage index must be 1..7", lineno);
        c.energy.stage_dynamic[s - 1] = std::stod(val);
      } else {
        throw ParseError("unknown config key: " + key, lineno);
      }
    } catch (const std::invalid_argument&) {
      throw ParseError("bad value for " + key, lineno);
    } catch (const std::out_of_range&) {
      throw ParseError("value out of range for " + key, lineno);
    }
  }
  c.validate();
  return c;
}

AccConfig load_config_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw IoError("cannot open config file: " + path);
  std::ostringstream ss;
  ss << is.rdbuf();
  auto name = path;
  const auto slash = name.find_last_of('/');
  if (slash != std::string::npos) name.erase(0, slash + 1);
  const auto dot = name.find_last_of('.');
  if (dot != std::string::npos) name.erase(dot);
  return parse_config_text(ss.str(), name);
}

std::string config_to_text(const AccConfig& cfg) {
  std::ostringstream os;
  os << "fold_width = " << cfg.fold_width << "\n";
  os << "tiles = " << cfg.tiles << "\n";
  os << "ca90_rf_regs = " << cfg.ca90_rf_regs << "\n";
  os << "bnd_rf_regs = " << cfg.bnd_rf_regs << "\n";
  os << "dsum_regs = " << cfg.dsum_regs << "\n";
  os << "distance_bits = " << cfg.distance_bits << "\n";
  os << "bnd_bits = " << cfg.bnd_bits << "\n";
  os << "memory_capacity = " << cfg.memory_capacity << "\n";
  os << "active_tile_mask = " << cfg.active_tile_mask << "\n";
  os << "leakage_per_tile = " << cfg.energy.leakage_per_tile << "\n";
  for (int s = 0; s < 7; ++s)
    os << "stage_dynamic_" << (s + 1) << " = " << cfg.energy.stage_dynamic[s] << "\n";
  return os.str();
}

}  // namespace vsaforge
