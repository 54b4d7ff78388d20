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
#include <vector>

#include "magion/core/device.hpp"
#include "magion/core/random.hpp"
#include "magion/core/state.hpp"

namespace magion {

// Each active dot draws SD vs vortex from (p_sd, p_v), then independently
// draws its direction subclass from (p_dir_rcw, 1 - p_dir_rcw). Inactive
// dots read as ParamagneticOff and consume no randomness.

/// Samples one dot. Two uniform draws, class first.
MagneticState sample_dot(const DotProfile& profile, RandomStream& rng);

/// One degauss of a circuit, in the circuit's reading order.
/// Throws EmptyDevice for a circuit without dots.
DegaussTrace degauss_sample(const Circuit& circuit, RandomStream& rng, std::size_t trial_index = 0);

/// One degauss of the whole device in device reading order (all cells of
/// all circuits sorted by row, then column).
DegaussTrace degauss_sample(const Device& device, RandomStream& rng, std::size_t trial_index = 0);

std::vector<DegaussTrace> degauss_series(const Circuit& circuit, std::size_t count, RandomStream& rng);

/// Runs `trials` degauss cycles and estimates every dot's probabilities.
///
/// A dot is recorded deterministic iff all outcomes share one SD/vortex
/// class. Throws InvalidArgument for trials < 1, InactiveDot when the
/// circuit was never gated, and MajorityTie when an even trial count splits
/// a dot exactly in half (re-enroll with an odd count).
DeviceLibrary enroll(const Circuit& circuit, int trials, RandomStream& rng,
                     std::string device_id = "device");

}  // namespace magion
