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
#include <span>
#include <vector>

#include "magion/analytics/mapping.hpp"
#include "magion/core/state.hpp"

namespace magion {

/// Number of positions whose mapped symbols differ. Throws LengthMismatch
/// or OffState.
std::size_t hamming_distance(const DegaussTrace& a, const DegaussTrace& b, const StateMapping& mapping);

struct FhdResult {
  double mean_fhd = 0.0;
  /// histogram[h] counts pairs at Hamming distance h, i.e. FHD in
  /// [h/N, (h+1)/N). N + 1 bins.
  std::vector<std::size_t> histogram;
  std::size_t pair_count = 0;
  std::size_t sequence_length = 0;

  double bin_width() const { return sequence_length == 0 ? 0.0 : 1.0 / static_cast<double>(sequence_length); }
};

/// Mean fractional Hamming distance over all unordered pairs of traces.
/// Throws InsufficientData for fewer than two traces or empty traces.
FhdResult fhd_intra(std::span<const DegaussTrace> traces, const StateMapping& mapping);

/// Mean FHD from per-position symbol counts: a pair agrees at a position
/// iff both traces carry the same symbol, so the disagreeing pairs are
/// C(M,2) - sum_s C(n_s,2). O(M N) and equal to fhd_intra(...).mean_fhd.
double fhd_intra_from_counts(std::span<const DegaussTrace> traces, const StateMapping& mapping);

/// Same, over pre-mapped symbol rows and an index sample (for bootstrapping).
double fhd_intra_from_counts(const std::vector<std::vector<std::uint8_t>>& symbols,
                             std::span<const std::size_t> rows, std::size_t symbol_count);

/// Expected pairwise mismatch rate for independent draws:
/// (1/N) * sum_k (1 - sum_s p_{k,s}^2). Each distribution must sum to 1
/// within 1e-9 (InvalidProfile otherwise).
double expected_fhd(const std::vector<std::vector<double>>& distributions);

/// Per-dot symbol distributions of a library under a mapping.
std::vector<std::vector<double>> symbol_distributions(const DeviceLibrary& library, const StateMapping& mapping);

}  // namespace magion
