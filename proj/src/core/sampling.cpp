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

#include "magion/core/sampling.hpp"

#include <algorithm>
#include <utility>

#include <fmt/core.h>

#include "magion/core/error.hpp"

namespace magion {

MagneticState sample_dot(const DotProfile& profile, RandomStream& rng) {
  const bool sd = rng.bernoulli(profile.p_sd());
  const bool rcw = rng.bernoulli(profile.p_dir_rcw());
  return compose_state(sd ? StateClass::SingleDomain : StateClass::Vortex, rcw);
}

DegaussTrace degauss_sample(const Circuit& circuit, RandomStream& rng, std::size_t trial_index) {
  if (circuit.size() == 0) {
    throw Error(ErrorCode::EmptyDevice, fmt::format("circuit '{}' has no dots", circuit.id()));
  }
  DegaussTrace trace{trial_index, {}};
  trace.states.reserve(circuit.size());
  const bool on = circuit.active();
  for (const auto& profile : circuit.profiles()) {
    trace.states.push_back(on ? sample_dot(profile, rng) : MagneticState::ParamagneticOff);
  }
  return trace;
}

DegaussTrace degauss_sample(const Device& device, RandomStream& rng, std::size_t trial_index) {
  if (device.dot_count() == 0) {
    throw Error(ErrorCode::EmptyDevice, fmt::format("device '{}' has no dots", device.id()));
  }
  struct Slot {
    GridCell cell;
    const Circuit* circuit;
    std::size_t index;
  };
  std::vector<Slot> slots;
  slots.reserve(device.dot_count());
  for (const auto& c : device.circuits()) {
    for (std::size_t i = 0; i < c.size(); ++i) slots.push_back({c.cells()[i], &c, i});
  }
  std::sort(slots.begin(), slots.end(), [](const Slot& a, const Slot& b) { return a.cell < b.cell; });

  DegaussTrace trace{trial_index, {}};
  trace.states.reserve(slots.size());
  for (const auto& s : slots) {
    trace.states.push_back(s.circuit->active() ? sample_dot(s.circuit->profiles()[s.index], rng)
                                               : MagneticState::ParamagneticOff);
  }
  return trace;
}

std::vector<DegaussTrace> degauss_series(const Circuit& circuit, std::size_t count, RandomStream& rng) {
  std::vector<DegaussTrace> traces;
  traces.reserve(count);
  for (std::size_t t = 0; t < count; ++t) traces.push_back(degauss_sample(circuit, rng, t));
  return traces;
}

DeviceLibrary enroll(const Circuit& circuit, int trials, RandomStream& rng, std::string device_id) {
  if (trials < 1) throw Error(ErrorCode::InvalidArgument, "enrollment needs at least one trial");
  if (!circuit.active()) {
    throw Error(ErrorCode::InactiveDot,
                fmt::format("circuit '{}' has never been gated; nothing to enroll", circuit.id()));
  }
  const std::size_t n = circuit.size();
  std::vector<int> sd_count(n, 0);
  std::vector<int> rcw_count(n, 0);
  for (int t = 0; t < trials; ++t) {
    const auto trace = degauss_sample(circuit, rng, static_cast<std::size_t>(t));
    for (std::size_t i = 0; i < n; ++i) {
      sd_count[i] += is_single_domain(trace.states[i]) ? 1 : 0;
      rcw_count[i] += is_right_or_cw(trace.states[i]) ? 1 : 0;
    }
  }

  DeviceLibrary lib;
  lib.device_id = std::move(device_id);
  lib.circuit_id = circuit.id();
  lib.gating = circuit.gating_history().back();
  lib.enrollment_trials = trials;
  lib.profiles.reserve(n);
  const double m = static_cast<double>(trials);
  for (std::size_t i = 0; i < n; ++i) {
    if (2 * sd_count[i] == trials) {
      throw Error(ErrorCode::MajorityTie,
                  fmt::format("dot {} split {}/{} between SD and vortex; enroll with an odd trial count",
                              i + 1, sd_count[i], trials - sd_count[i]));
    }
    lib.profiles.emplace_back(static_cast<int>(i + 1), sd_count[i] / m, rcw_count[i] / m);
  }
  return lib;
}

}  // namespace magion
