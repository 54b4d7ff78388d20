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

#include "magion/analytics/mapping.hpp"

#include <algorithm>

#include <fmt/core.h>

#include "magion/core/error.hpp"

namespace magion {

StateMapping StateMapping::four_state() { return {MappingMode::FourState, {0, 1, 2, 3}}; }

// states: SDR, SDL, VCW, VCCW
StateMapping StateMapping::binary_direction() { return {MappingMode::BinaryDirection, {1, 0, 1, 0}}; }

StateMapping StateMapping::binary_direction_paired() {
  return {MappingMode::BinaryDirection, {1, 0, 0, 1}};
}

StateMapping StateMapping::custom(MappingMode mode, std::array<std::uint8_t, 4> symbols) {
  auto sorted = symbols;
  std::sort(sorted.begin(), sorted.end());
  if (mode == MappingMode::FourState) {
    if (sorted != std::array<std::uint8_t, 4>{0, 1, 2, 3}) {
      throw Error(ErrorCode::InvalidArgument, "four-state mapping must be a permutation of 0..3");
    }
  } else if (sorted.front() != 0 || sorted.back() != 1) {
    throw Error(ErrorCode::InvalidArgument, "binary mapping must use both symbols 0 and 1");
  }
  return {mode, symbols};
}

std::uint8_t StateMapping::operator()(MagneticState s) const {
  if (is_off(s)) throw Error(ErrorCode::OffState, "paramagnetic (OFF) dot in analysed trace");
  return symbols_[static_cast<std::size_t>(s) - 1];
}

std::vector<std::uint8_t> StateMapping::apply(const DegaussTrace& trace) const {
  std::vector<std::uint8_t> out;
  out.reserve(trace.states.size());
  for (auto s : trace.states) out.push_back((*this)(s));
  return out;
}

std::vector<double> StateMapping::symbol_distribution(const DotProfile& profile) const {
  const double r = profile.p_dir_rcw();
  const std::array<double, 4> state_p{profile.p_sd() * r, profile.p_sd() * (1.0 - r),
                                      profile.p_v() * r, profile.p_v() * (1.0 - r)};
  std::vector<double> out(symbol_count(), 0.0);
  for (std::size_t i = 0; i < 4; ++i) out[symbols_[i]] += state_p[i];
  return out;
}

StateMapping parse_mapping(std::string_view name) {
  if (name == "four" || name == "four-state") return StateMapping::four_state();
  if (name == "binary" || name == "binary-direction") return StateMapping::binary_direction();
  if (name == "binary-paired") return StateMapping::binary_direction_paired();
  throw Error(ErrorCode::InvalidArgument,
              fmt::format("unknown mapping '{}' (expected four, binary or binary-paired)", name));
}

}  // namespace magion
