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

#include "magion/core/profile.hpp"
#include "magion/puf/challenge.hpp"

namespace magion {

/// Probability that one readout of each device disagrees on SD vs vortex at
/// a dot, from the two vortex probabilities: p_v1 + p_v2 - 2 p_v1 p_v2.
double mismatch_probability(double p_v1, double p_v2);

/// The same quantity written as p_v1 p_sd2 + p_sd1 p_v2.
double mismatch_probability_crossed(double p_v1, double p_v2);

/// Probabilistic fractional inter-device Hamming distance: mean mismatch
/// probability over the challenged dots. Throws InvalidArgument when a
/// position is missing from either library.
double pfhd_inter(const DeviceLibrary& lib1, const DeviceLibrary& lib2, const Challenge& challenge);

}  // namespace magion
