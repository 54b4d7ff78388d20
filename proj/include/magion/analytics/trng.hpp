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
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "magion/analytics/mapping.hpp"
#include "magion/core/state.hpp"

namespace magion {

using BitStream = std::vector<std::uint8_t>;

/// One bit per dot in reading order. Binary mappings only.
BitStream extract_bits(const DegaussTrace& trace, const StateMapping& mapping);

/// Concatenation of extract_bits over consecutive traces.
BitStream extract_stream(std::span<const DegaussTrace> traces, const StateMapping& mapping);

std::string to_bitstring(const BitStream& bits);

/// |#1 - #0| / sqrt(n); approximately |N(0,1)| for an unbiased source.
double monobit_statistic(const BitStream& bits);

struct RunsResult {
  std::size_t runs = 0;
  double expected = 0.0;
  double z = 0.0;
};

/// Wald-Wolfowitz runs test against independence.
RunsResult runs_test(const BitStream& bits);

}  // namespace magion
