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

#include "vsaforge/report.hpp"

#include <cinttypes>
#include <cstdio>

#include "json.hpp"
#include "vsaforge/isa.hpp"

namespace vsaforge {

namespace {

// Energies print with fixed precision so reports stay byte-identical across
// runs.
std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

}  // namespace

std::string report_to_json(const sim::RunReport& r, bool oracle_match,
                           const std::string& workload, std::uint64_t seed) {
  nlohmann::ordered_json j;
  j["version"] = kReportVersion;
  j["workload"] = workload;
  j["seed"] = seed;
  j["config"] = r.config_name;
  j["control"] = r.control_mode;
  j["total_cycles"] = r.total_cycles;
  j["words_executed"] = r.words_executed;
  nlohmann::ordered_json util;
  for (int s = 0; s < isa::kNumStages; ++s)
    util[std::string(isa::stage_name(static_cast<isa::StageId>(s)))] =
        fixed6(r.utilization[s]);
  j["utilization"] = util;
  j["energy_total"] = fixed6(r.energy_total);
  j["mean_power"] = fixed6(r.mean_power);
  j["results"] = r.result_indices;
  char digest[32];
  std::snprintf(digest, sizeof digest, "%016" PRIx64, r.results_digest);
  j["results_digest"] = digest;
  j["dsum_saturated"] = r.dsum_saturated;
  j["faulted"] = r.faulted;
  if (r.faulted) j["fault_message"] = r.fault_message;
  j["oracle_match"] = oracle_match;
  return j.dump(2) + "\n";
}

std::string compare_to_csv(const std::vector<CompareCell>& cells) {
  std::string out = "workload,config,control,factors,cycles,energy,mean_power,"
                    "oracle_match,speedup\n";
  for (const auto& c : cells) {
    out += c.workload + ',' + c.config + ',' + c.control + ',' +
           std::to_string(c.factors) + ',' + std::to_string(c.cycles) + ',' +
           fixed6(c.energy) + ',' + fixed6(c.mean_power) + ',' +
           (c.oracle_match ? "1" : "0") + ',' + fixed6(c.speedup) + '\n';
  }
  return out;
}

std::string compare_to_json(const std::vector<CompareCell>& cells) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& c : cells) {
    nlohmann::ordered_json j;
    j["workload"] = c.workload;
    j["config"] = c.config;
    j["control"] = c.control;
    j["factors"] = c.factors;
    j["cycles"] = c.cycles;
    j["energy"] = fixed6(c.energy);
    j["mean_power"] = fixed6(c.mean_power);
    j["oracle_match"] = c.oracle_match;
    j["speedup"] = fixed6(c.speedup);
    arr.push_back(std::move(j));
  }
  nlohmann::ordered_json root;
  root["version"] = kReportVersion;
  root["cells"] = arr;
  return root.dump(2) + "\n";
}

}  // namespace vsaforge
