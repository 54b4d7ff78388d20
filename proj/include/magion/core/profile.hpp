// Copyright 2026 The Magion Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "magion/core/state.hpp"

namespace magion {

/// Enrolled behaviour of a single dot.
///
/// Only p_sd is stored; the vortex probability is its complement so the two
/// always sum to one. The bit kind and majority state are derived from p_sd:
/// a dot is deterministic iff p_sd is exactly 0 or 1, and the majority is SD
/// iff p_sd > 0.5.
class DotProfile {
 public:
  /// Throws InvalidProfile when a probability is outside [0,1] or the
  /// position is not 1-based.
  DotProfile(int position, double p_sd, double p_dir_rcw);

  int position() const noexcept { return position_; }
  double p_sd() const noexcept { return p_sd_; }
  double p_v() const noexcept { return 1.0 - p_sd_; }
  double p_dir_rcw() const noexcept { return p_dir_rcw_; }

  double probability_of(StateClass cls) const {
    return cls == StateClass::SingleDomain ? p_sd() : p_v();
  }

  BitKind bit_kind() const noexcept;
  bool is_pbit() const noexcept { return bit_kind() == BitKind::Probabilistic; }

  /// SD iff p_sd > 0.5. Exact ties report Vortex; stored libraries reject
  /// them, see DeviceLibrary::validate.
  StateClass majority_state() const noexcept;
  bool has_majority_tie() const noexcept { return p_sd_ == 0.5; }

  /// Per-readout error probability against the majority state.
  double minority_probability() const noexcept;

  DotProfile with_p_sd(double p_sd) const { return {position_, p_sd, p_dir_rcw_}; }

  friend bool operator==(const DotProfile&, const DotProfile&) = default;

 private:
  int position_;
  double p_sd_;
  double p_dir_rcw_;
};

struct GatingEvent {
  double voltage = 0.0;       // volts, negative activates
  double duration_min = 0.0;  // minutes

  friend bool operator==(const GatingEvent&, const GatingEvent&) = default;
};

/// Enrolled fingerprint of one circuit.
struct DeviceLibrary {
  std::string device_id;
  std::string circuit_id;
  GatingEvent gating;
  std::vector<DotProfile> profiles;  // reading order, positions 1..N
  int enrollment_trials = 0;         // M; 0 marks a model profile that was never enrolled
  bool synthetic = false;            // placeholder data not measured on a device

  std::size_t size() const noexcept { return profiles.size(); }
  std::size_t pbit_count() const;
  std::size_t dbit_count() const { return size() - pbit_count(); }

  /// Profile at 1-based position. Throws InvalidArgument when absent.
  const DotProfile& at(int position) const;
  bool contains(int position) const noexcept;

  /// Checks the stored-library invariants: non-empty, positions 1..N in
  /// order, no majority ties. Throws Invariant.
  void validate() const;
};

}  // namespace magion
