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
#include "magion/core/profile.hpp"

namespace magion {

inline constexpr double kSecondsPerYear = 3.156e7;

/// Binary entropy in bits with 0 log 0 = 0. Throws InvalidArgument outside [0,1].
double shannon_entropy_bit(double p);

struct EntropyReport {
  std::vector<double> per_bit;
  double total = 0.0;
  double mean = 0.0;
};

/// Entropy of the direction subclass of every dot. Only binary mappings are
/// accepted; four-state entropy is not computed.
EntropyReport total_entropy(const DeviceLibrary& library,
                            const StateMapping& mapping = StateMapping::binary_direction());

/// Entropy of a list of per-bit probabilities. Throws InsufficientData when empty.
EntropyReport total_entropy(std::span<const double> probabilities);

/// Number of distinguishable sequences, 2^h_total.
long double sequence_count(double h_total);

struct LockStrength {
  double total_entropy = 0.0;
  std::size_t dots = 0;
  long double sequences = 0.0L;
  long double seconds = 0.0L;
  long double years = 0.0L;
};

/// Brute-force cost of guessing a password drawn from every active
/// circuit. Throws InsufficientData for no libraries, InvalidArgument for a
/// non-positive rate.
LockStrength lock_strength(std::span<const DeviceLibrary> libraries, double guesses_per_second);

LockStrength lock_strength(double h_total, std::size_t dots, double guesses_per_second);

}  // namespace magion
