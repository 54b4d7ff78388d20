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

#include "magion/core/gating.hpp"

#include <algorithm>

#include <fmt/core.h>

#include "magion/core/error.hpp"

namespace magion {

GatingCalibration::GatingCalibration(std::vector<CalibrationAnchor> anchors) : anchors_(std::move(anchors)) {
  if (anchors_.empty()) throw Error(ErrorCode::InvalidArgument, "calibration needs at least one anchor");
  std::sort(anchors_.begin(), anchors_.end(),
            [](const auto& a, const auto& b) { return a.duration_min < b.duration_min; });
  const std::size_t n = anchors_.front().p_sd.size();
  for (std::size_t i = 0; i < anchors_.size(); ++i) {
    const auto& a = anchors_[i];
    if (a.duration_min <= 0.0) {
      throw Error(ErrorCode::InvalidArgument, "calibration anchors need positive durations");
    }
    if (i > 0 && a.duration_min == anchors_[i - 1].duration_min) {
      throw Error(ErrorCode::InvalidArgument,
                  fmt::format("two calibration anchors at {} min", a.duration_min));
    }
    if (a.p_sd.size() != n) {
      throw Error(ErrorCode::InvalidArgument, "calibration anchors disagree on dot count");
    }
    for (double p : a.p_sd) {
      if (!(p >= 0.0 && p <= 1.0)) {
        throw Error(ErrorCode::InvalidProfile, fmt::format("calibration p_sd {} outside [0,1]", p));
      }
    }
  }
}

GatingCalibration GatingCalibration::from_libraries(const std::vector<DeviceLibrary>& libraries) {
  std::vector<CalibrationAnchor> anchors;
  for (const auto& lib : libraries) {
    CalibrationAnchor a{lib.gating.duration_min, {}};
    for (const auto& p : lib.profiles) a.p_sd.push_back(p.p_sd());
    anchors.push_back(std::move(a));
  }
  return GatingCalibration(std::move(anchors));
}

std::size_t GatingCalibration::dot_count() const noexcept { return anchors_.front().p_sd.size(); }

std::vector<double> GatingCalibration::p_sd_at(double duration_min) const {
  if (duration_min <= anchors_.front().duration_min) return anchors_.front().p_sd;
  if (duration_min >= anchors_.back().duration_min) return anchors_.back().p_sd;
  auto hi = std::upper_bound(anchors_.begin(), anchors_.end(), duration_min,
                             [](double d, const CalibrationAnchor& a) { return d < a.duration_min; });
  auto lo = hi - 1;
  const double w = (duration_min - lo->duration_min) / (hi->duration_min - lo->duration_min);
  std::vector<double> out(lo->p_sd.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = (1.0 - w) * lo->p_sd[i] + w * hi->p_sd[i];
  }
  return out;
}

Device apply_gating(const Device& device, std::string_view circuit_id, const GatingEvent& event,
                    const GatingCalibration* calibration) {
  const Circuit& target = device.circuit(circuit_id);
  if (event.voltage >= 0.0) {
    throw Error(ErrorCode::UnsupportedProtocol,
                fmt::format("gating at {} V: only negative (activating) voltages are modeled", event.voltage));
  }
  if (event.duration_min < 0.0) {
    throw Error(ErrorCode::InvalidArgument, fmt::format("negative gating duration {}", event.duration_min));
  }
  if (event.duration_min == 0.0) return device;

  if (calibration == nullptr) return device.with_circuit(target.gated(event));
  if (calibration->dot_count() != target.size()) {
    throw Error(ErrorCode::InvalidArgument,
                fmt::format("calibration covers {} dots, circuit '{}' has {}", calibration->dot_count(),
                            target.id(), target.size()));
  }
  const auto p_sd = calibration->p_sd_at(event.duration_min);
  return device.with_circuit(target.gated(event, &p_sd));
}

}  // namespace magion
