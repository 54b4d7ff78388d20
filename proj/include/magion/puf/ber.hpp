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

#include "magion/core/device.hpp"
#include "magion/core/random.hpp"
#include "magion/puf/challenge.hpp"

namespace magion {

/// Probability that more than half of `trials` independent readouts are
/// wrong when each is wrong with probability `p_error`:
///
///   sum_{j=floor(T/2)+1}^{T} C(T,j) p^j (1-p)^(T-j)
///
/// Coefficients are exact integers; the sum runs in long double.
long double majority_error_probability(double p_error, int trials);

/// Mean post-vote error probability over the challenged dots. Each dot's
/// per-readout error is its minority probability min(p_sd, p_v), mixed
/// with the optional readout flip probability.
double ber_closed_form(const DeviceLibrary& library, const Challenge& challenge, int trials,
                       double readout_noise = 0.0);

struct BerEstimate {
  double ber = 0.0;
  double std_error = 0.0;
  std::size_t bits = 0;
};

/// Monte-Carlo BER: `repetitions` calls of respond() on the circuit, each
/// compared against the library's majority states. Repetitions are split
/// over a fixed number of sub-streams so the result depends only on the
/// seed, not on the thread count.
BerEstimate ber_empirical(const Circuit& circuit, const DeviceLibrary& library, const Challenge& challenge,
                          int trials, std::size_t repetitions, RandomStream& rng, double readout_noise = 0.0);

struct BerPoint {
  int trials = 1;
  double ber = 0.0;
};

std::vector<BerPoint> ber_curve(const DeviceLibrary& library, const Challenge& challenge,
                                std::span<const int> trial_counts);

}  // namespace magion
