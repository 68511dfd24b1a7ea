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

#include <cstdint>
#include <string>
#include <vector>

#include "vsaforge/codebook.hpp"
#include "vsaforge/machine.hpp"
#include "vsaforge/primitives.hpp"

namespace vsaforge::wl {

/// Workload identity and size knobs. The per-workload defaults are the
/// evaluation sizes; dim/fold_width/seed and the FACT complexity are
/// adjustable.
struct WorkloadParams {
  std::string name = "fact";  // mult | tree | fact | react
  std::uint32_t dim = 2048;
  std::uint32_t fold_width = 512;
  std::uint64_t seed = 1;

  // mult: multi-modal record classification
  std::uint32_t mult_samples = 300;
  std::uint32_t mult_items = 120;
  std::uint32_t mult_classes = 16;
  std::uint32_t mult_queries = 100;
  std::uint32_t mult_pairs = 2;  // record fields per sample

  // tree: sequence encoding and clean-up search
  std::uint32_t tree_count = 70;
  std::uint32_t tree_items = 9;
  std::uint32_t tree_queries = 400;
  std::uint32_t tree_depth = 5;

  // fact: resonator factorization
  std::uint32_t fact_iterations = 60;
  std::uint32_t fact_item_pool = 120;
  std::uint32_t fact_prototypes = 13;
  std::uint32_t fact_factors = 3;
  std::uint32_t fact_composites = 3;

  // react: associative motor memory
  std::uint32_t react_samples = 500;
  std::uint32_t react_items = 55;
  std::uint32_t react_recalls = 160;

  std::uint32_t folds() const { return dim / fold_width; }
};

/// A fully generated workload: data image, primitive-op stream, and the
/// oracle-computed golden results the simulator must reproduce bit-exactly.
struct BuiltWorkload {
  WorkloadParams params;
  sim::LoadImage image;
  std::vector<isa::PrimitiveOp> ops;
  std::vector<std::uint32_t> expected;
  std::vector<Codebook> codebooks;        // dumped by the CLI gen command
  std::vector<Hypervector> query_vectors;  // probes/composites, one per result set
};

/// Generates the named workload for one accelerator config. Pure in
/// (params, cfg): identical inputs give identical data, programs, and goldens.
BuiltWorkload build_workload(const AccConfig& cfg, const WorkloadParams& params);

bool is_workload_name(const std::string& name);

}  // namespace vsaforge::wl
