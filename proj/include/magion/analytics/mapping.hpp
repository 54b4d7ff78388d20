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

#include <array>
#include <cstdint>
#include <string_view>
#include <vector>

#include "magion/core/profile.hpp"
#include "magion/core/state.hpp"

namespace magion {

enum class MappingMode : std::uint8_t { FourState, BinaryDirection };

/// Assignment of the four ON states to analysis symbols.
///
/// FourState keeps every state distinct. BinaryDirection collapses
/// orientation/chirality into two subclasses: by default right-SD and
/// CW-vortex map to 1, left-SD and CCW-vortex to 0. The paired grouping
/// (states 1+4 vs 2+3) is available as `binary_direction_paired`; it gives
/// identical Hamming distances with flipped vortex polarity in bitstreams.
/// OFF states are rejected by every mapping.
class StateMapping {
 public:
  static StateMapping four_state();
  static StateMapping binary_direction();
  static StateMapping binary_direction_paired();

  /// `symbols[s - 1]` is the symbol of state s in 1..4. FourState requires a
  /// bijection onto 0..3, BinaryDirection requires both 0 and 1 to be used.
  static StateMapping custom(MappingMode mode, std::array<std::uint8_t, 4> symbols);

  MappingMode mode() const noexcept { return mode_; }
  bool is_binary() const noexcept { return mode_ == MappingMode::BinaryDirection; }
  std::size_t symbol_count() const noexcept { return is_binary() ? 2 : 4; }
  const std::array<std::uint8_t, 4>& symbols() const noexcept { return symbols_; }

  /// Throws OffState for ParamagneticOff.
  std::uint8_t operator()(MagneticState s) const;

  std::vector<std::uint8_t> apply(const DegaussTrace& trace) const;

  /// Probability of each symbol for a dot under independent class/direction draws.
  std::vector<double> symbol_distribution(const DotProfile& profile) const;

 private:
  StateMapping(MappingMode mode, std::array<std::uint8_t, 4> symbols) : mode_(mode), symbols_(symbols) {}

  MappingMode mode_;
  std::array<std::uint8_t, 4> symbols_;
};

/// "four", "binary" or "binary-paired". Throws InvalidArgument.
StateMapping parse_mapping(std::string_view name);

}  // namespace magion
