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
#include "vsaforge/primitives.hpp"

namespace vsaforge::sim {

/// Emits primitive-op streams against a load image, mirroring the layout the
/// machine will compute. High-level emitters encapsulate the batching imposed
/// by the register-file sizes (R, B, D) so the same workload adapts to every
/// accelerator preset.
class ProgramBuilder {
 public:
  explicit ProgramBuilder(const AccConfig& cfg);

  /// Regions must all be added before the first emit.
  void add_region(Region r);

  const RegionLayout& region(const std::string& name) const;
  LoadImage take_image();
  std::vector<isa::PrimitiveOp> take_ops();
  const AccConfig& config() const { return cfg_; }
  std::uint32_t folds() const { return num_folds_; }
  /// Sets the fold count L used by the vector-level emitters.
  void set_folds(std::uint32_t l);

  // -- addressing ------------------------------------------------------------
  /// Tile-uniform slot of fold k of vector v (any placement).
  std::uint16_t slot_of(const std::string& region, std::uint32_t v,
                        std::uint32_t k = 0) const;
  /// Active-tile rank owning vector v of a distributed region.
  std::uint8_t owner_of(const std::string& region, std::uint32_t v) const;
  /// Active-tile rank owning fold k of vector v of a striped region.
  std::uint8_t owner_of_fold(const std::string& region, std::uint32_t v,
                             std::uint32_t k) const;

  // -- raw emission ----------------------------------------------------------
  void emit(isa::PrimitiveOp op) { ops_.push_back(std::move(op)); }

  // -- CA seed streams -------------------------------------------------------
  /// Handle to a CA-90 expansion of one seed held in an RF register.
  struct Stream {
    std::uint16_t seed_slot = 0;
    std::uint8_t rf = 0;
    std::int32_t fold = -1;  // fold currently in the register, -1 = unloaded
  };
  Stream open_stream(const std::string& seed_region, std::uint32_t item,
                     std::uint8_t rf);
  /// Emits LOAD/STEP ops so the stream's register holds fold k; the final
  /// advance can ride on the consuming op (returned as `consume_step`).
  bool position(Stream& s, std::uint32_t k);

  // -- vector-level emitters ---------------------------------------------
  /// Loads the L folds of a stored vector into QRY[0..L).
  void load_query(const std::string& region, std::uint32_t v);

  /// Nearest-neighbor scan of a whole region against QRY[0..L), appending the
  /// winner's vector index to the machine results. Batches vectors through
  /// the DSUM/CA registers; CA-seed regions are regenerated on the fly.
  void scan_region(const std::string& region, bool append_result = true);

  /// Signs BND register b and stores it as fold k of a stored vector.
  void store_sign(const std::string& region, std::uint32_t v, std::uint32_t k,
                  std::uint8_t bnd);
  /// Stores the bind buffer as fold k of vector v.
  void store_bb(const std::string& region, std::uint32_t v, std::uint32_t k);

 private:
  AccConfig cfg_;
  LoadImage image_;
  ImageLayout layout_;
  std::vector<isa::PrimitiveOp> ops_;
  std::uint32_t num_folds_ = 1;
  bool layout_dirty_ = false;

  void refresh_layout();
};

}  // namespace vsaforge::sim
