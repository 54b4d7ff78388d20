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

#include "magion/core/profile.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include <fmt/core.h>

#include "magion/core/error.hpp"

namespace magion {

namespace {

bool is_probability(double p) { return p >= 0.0 && p <= 1.0; }

}  // namespace

StateClass state_class(MagneticState s) {
  if (is_off(s)) throw Error(ErrorCode::OffState, "paramagnetic dot has no SD/vortex class");
  return is_single_domain(s) ? StateClass::SingleDomain : StateClass::Vortex;
}

std::string_view to_string(StateClass cls) { return cls == StateClass::SingleDomain ? "SD" : "V"; }

std::string_view to_string(BitKind kind) { return kind == BitKind::Deterministic ? "d" : "p"; }

std::string_view to_string(MagneticState s) {
  switch (s) {
    case MagneticState::ParamagneticOff: return "OFF";
    case MagneticState::SdRight: return "SDR";
    case MagneticState::SdLeft: return "SDL";
    case MagneticState::VortexCw: return "VCW";
    case MagneticState::VortexCcw: return "VCCW";
  }
  return "?";
}

StateClass parse_state_class(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "sd" || lower == "s") return StateClass::SingleDomain;
  if (lower == "v" || lower == "vortex") return StateClass::Vortex;
  throw Error(ErrorCode::InvalidArgument, fmt::format("unknown state class '{}'", text));
}

DotProfile::DotProfile(int position, double p_sd, double p_dir_rcw)
    : position_(position), p_sd_(p_sd), p_dir_rcw_(p_dir_rcw) {
  if (position < 1) {
    throw Error(ErrorCode::InvalidProfile, fmt::format("dot position {} is not 1-based", position));
  }
  if (!is_probability(p_sd) || !is_probability(p_dir_rcw)) {
    throw Error(ErrorCode::InvalidProfile,
                fmt::format("dot {}: probabilities p_sd={} p_dir_rcw={} outside [0,1]", position,
                            p_sd, p_dir_rcw));
  }
}

BitKind DotProfile::bit_kind() const noexcept {
  return (p_sd_ == 0.0 || p_sd_ == 1.0) ? BitKind::Deterministic : BitKind::Probabilistic;
}

StateClass DotProfile::majority_state() const noexcept {
  return p_sd_ > 0.5 ? StateClass::SingleDomain : StateClass::Vortex;
}

double DotProfile::minority_probability() const noexcept { return std::min(p_sd_, 1.0 - p_sd_); }

std::size_t DeviceLibrary::pbit_count() const {
  return static_cast<std::size_t>(
      std::count_if(profiles.begin(), profiles.end(), [](const DotProfile& p) { return p.is_pbit(); }));
}

bool DeviceLibrary::contains(int position) const noexcept {
  return position >= 1 && static_cast<std::size_t>(position) <= profiles.size();
}

const DotProfile& DeviceLibrary::at(int position) const {
  if (!contains(position)) {
    throw Error(ErrorCode::InvalidArgument,
                fmt::format("position {} not in library '{}' ({} dots)", position, device_id,
                            profiles.size()));
  }
  return profiles[static_cast<std::size_t>(position - 1)];
}

void DeviceLibrary::validate() const {
  if (profiles.empty()) throw Error(ErrorCode::Invariant, "library has no profiles");
  if (enrollment_trials < 0) throw Error(ErrorCode::Invariant, "negative enrollment trial count");
  for (std::size_t i = 0; i < profiles.size(); ++i) {
    const auto& p = profiles[i];
    if (p.position() != static_cast<int>(i + 1)) {
      throw Error(ErrorCode::Invariant,
                  fmt::format("profile {} has position {}; expected reading order 1..N", i + 1,
                              p.position()));
    }
    if (p.has_majority_tie()) {
      throw Error(ErrorCode::Invariant,
                  fmt::format("dot {} has p_sd = 0.5; majority state is undefined", p.position()));
    }
  }
}

}  // namespace magion
