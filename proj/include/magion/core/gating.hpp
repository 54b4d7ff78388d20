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

#include <string_view>
#include <vector>

#include "magion/core/device.hpp"

namespace magion {

/// Per-dot p_sd measured after a known gating duration.
struct CalibrationAnchor {
  double duration_min = 0.0;
  std::vector<double> p_sd;
};

/// Phenomenological mapping from gating duration to per-dot p_sd.
///
/// Values are linearly interpolated between anchors and clamped to the
/// first/last anchor outside their span. A zero duration leaves the circuit
/// paramagnetic.
class GatingCalibration {
 public:
  /// Anchors may be given in any order; all must have the same dot count
  /// and distinct positive durations.
  explicit GatingCalibration(std::vector<CalibrationAnchor> anchors);

  /// Anchors taken from enrolled libraries, keyed by each library's gating duration.
  static GatingCalibration from_libraries(const std::vector<DeviceLibrary>& libraries);

  std::size_t dot_count() const noexcept;
  const std::vector<CalibrationAnchor>& anchors() const noexcept { return anchors_; }

  std::vector<double> p_sd_at(double duration_min) const;

 private:
  std::vector<CalibrationAnchor> anchors_;
};

/// Applies a gating event to one circuit. Durations of zero are a no-op.
/// Throws UnknownCircuit, UnsupportedProtocol for voltage >= 0,
/// InvalidArgument for negative duration or a calibration whose dot count
/// differs from the circuit's.
Device apply_gating(const Device& device, std::string_view circuit_id, const GatingEvent& event,
                    const GatingCalibration* calibration = nullptr);

}  // namespace magion
