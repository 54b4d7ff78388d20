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

#include <cstdint>
#include <string_view>
#include <vector>

namespace magion {

/// Observable state of one dot after a degauss. Numeric values are the
/// state codes used in trace files.
enum class MagneticState : std::uint8_t {
  ParamagneticOff = 0,
  SdRight = 1,
  SdLeft = 2,
  VortexCw = 3,
  VortexCcw = 4,
};

/// Single-domain vs vortex, ignoring orientation/chirality.
enum class StateClass : std::uint8_t { SingleDomain, Vortex };

enum class BitKind : std::uint8_t { Deterministic, Probabilistic };

constexpr bool is_off(MagneticState s) { return s == MagneticState::ParamagneticOff; }

constexpr bool is_single_domain(MagneticState s) {
  return s == MagneticState::SdRight || s == MagneticState::SdLeft;
}

// Right-oriented SD and clockwise vortex form one direction subclass.
constexpr bool is_right_or_cw(MagneticState s) {
  return s == MagneticState::SdRight || s == MagneticState::VortexCw;
}

/// Class of an ON state. Throws OffState for ParamagneticOff.
StateClass state_class(MagneticState s);

constexpr MagneticState compose_state(StateClass cls, bool right_or_cw) {
  if (cls == StateClass::SingleDomain) {
    return right_or_cw ? MagneticState::SdRight : MagneticState::SdLeft;
  }
  return right_or_cw ? MagneticState::VortexCw : MagneticState::VortexCcw;
}

std::string_view to_string(StateClass cls);
std::string_view to_string(BitKind kind);
std::string_view to_string(MagneticState s);

/// Parses "SD"/"V" (case-insensitive, also "vortex"). Throws InvalidArgument.
StateClass parse_state_class(std::string_view text);

/// One degauss outcome: states of the sampled dots in reading order.
struct DegaussTrace {
  std::size_t trial_index = 0;
  std::vector<MagneticState> states;
};

}  // namespace magion
