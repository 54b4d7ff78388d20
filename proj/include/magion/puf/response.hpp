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

#include <optional>

#include "magion/core/device.hpp"
#include "magion/core/random.hpp"
#include "magion/puf/challenge.hpp"

namespace magion {

/// Degausses the circuit `trials` times and majority-votes the SD/vortex
/// class of each challenged dot.
///
/// The whole circuit is sampled on every trial, so the randomness consumed
/// does not depend on which dots are challenged or in what order.
/// `readout_noise` flips each observed class with that probability.
///
/// Throws InvalidArgument for an even or non-positive trial count or a
/// position outside the circuit, InactiveDot when the circuit is off.
Response respond(const Circuit& circuit, const Challenge& challenge, int trials, RandomStream& rng,
                 double readout_noise = 0.0);

struct Verification {
  int mismatches = 0;
  int threshold = 0;
  bool pass = false;
};

/// Compares a response to the library's majority states. Passes iff
/// mismatches <= threshold; the default threshold is floor(k/2), i.e. a
/// strict majority of positions must agree.
Verification verify(const Response& response, const DeviceLibrary& library, const Challenge& challenge,
                    std::optional<int> threshold = std::nullopt);

}  // namespace magion
