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

#include "vsaforge/machine.hpp"

namespace vsaforge {

inline constexpr int kReportVersion = 1;

/// Stable, byte-deterministic JSON rendering of a run report.
std::string report_to_json(const sim::RunReport& r, bool oracle_match,
                           const std::string& workload, std::uint64_t seed);

/// One cell of a comparison sweep.
struct CompareCell {
  std::string workload;
  std::string config;
  std::string control;
  std::uint32_t factors = 0;  // FACT complexity, 0 elsewhere
  std::uint64_t cycles = 0;
  double energy = 0;
  double mean_power = 0;
  bool oracle_match = false;
  double speedup = 1.0;  // baseline cycles / this cycles
};

std::string compare_to_csv(const std::vector<CompareCell>& cells);
std::string compare_to_json(const std::vector<CompareCell>& cells);

}  // namespace vsaforge
