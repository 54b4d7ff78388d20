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

#include "magion/puf/response.hpp"

#include <fmt/core.h>

#include "magion/core/error.hpp"
#include "magion/core/sampling.hpp"

namespace magion {

Response respond(const Circuit& circuit, const Challenge& challenge, int trials, RandomStream& rng,
                 double readout_noise) {
  if (trials < 1 || trials % 2 == 0) {
    throw Error(ErrorCode::InvalidArgument,
                fmt::format("majority voting needs an odd number of trials, got {}", trials));
  }
  challenge.require_within(circuit.size());
  if (!circuit.active()) {
    throw Error(ErrorCode::InactiveDot,
                fmt::format("challenged dots of circuit '{}' are paramagnetic (never gated)", circuit.id()));
  }

  const std::size_t k = challenge.size();
  std::vector<int> sd_votes(k, 0);
  for (int t = 0; t < trials; ++t) {
    const auto trace = degauss_sample(circuit, rng, static_cast<std::size_t>(t));
    for (std::size_t i = 0; i < k; ++i) {
      bool sd = is_single_domain(trace.states[static_cast<std::size_t>(challenge.positions()[i] - 1)]);
      if (readout_noise > 0.0 && rng.bernoulli(readout_noise)) sd = !sd;
      sd_votes[i] += sd ? 1 : 0;
    }
  }

  Response r;
  r.trials_used = trials;
  r.states.reserve(k);
  for (int votes : sd_votes) {
    r.states.push_back(2 * votes > trials ? StateClass::SingleDomain : StateClass::Vortex);
  }
  return r;
}

Verification verify(const Response& response, const DeviceLibrary& library, const Challenge& challenge,
                    std::optional<int> threshold) {
  if (response.states.size() != challenge.size()) {
    throw Error(ErrorCode::LengthMismatch, fmt::format("response has {} entries for a {}-dot challenge",
                                                       response.states.size(), challenge.size()));
  }
  Verification v;
  v.threshold = threshold.value_or(static_cast<int>(challenge.size() / 2));
  for (std::size_t i = 0; i < challenge.size(); ++i) {
    v.mismatches += response.states[i] != library.at(challenge.positions()[i]).majority_state() ? 1 : 0;
  }
  v.pass = v.mismatches <= v.threshold;
  return v;
}

}  // namespace magion
