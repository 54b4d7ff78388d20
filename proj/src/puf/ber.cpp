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

#include "magion/puf/ber.hpp"

#include <cmath>
#include <thread>

#include <fmt/core.h>

#include "magion/core/error.hpp"
#include "magion/puf/crp.hpp"
#include "magion/puf/response.hpp"

namespace magion {

namespace {

constexpr std::size_t kSubstreams = 8;

void require_odd(int trials) {
  if (trials < 1 || trials % 2 == 0) {
    throw Error(ErrorCode::InvalidArgument,
                fmt::format("majority voting needs an odd number of trials, got {}", trials));
  }
}

}  // namespace

long double majority_error_probability(double p_error, int trials) {
  require_odd(trials);
  if (!(p_error >= 0.0 && p_error <= 1.0)) {
    throw Error(ErrorCode::InvalidArgument, fmt::format("error probability {} outside [0,1]", p_error));
  }
  const long double p = p_error;
  const long double q = 1.0L - p;
  const auto t = static_cast<unsigned>(trials);
  long double sum = 0.0L;
  for (unsigned j = t / 2 + 1; j <= t; ++j) {
    const auto coeff = binomial(t, j).convert_to<long double>();
    sum += coeff * std::pow(p, static_cast<long double>(j)) * std::pow(q, static_cast<long double>(t - j));
  }
  return sum;
}

double ber_closed_form(const DeviceLibrary& library, const Challenge& challenge, int trials, double readout_noise) {
  require_odd(trials);
  challenge.require_within(library.size());
  long double sum = 0.0L;
  for (int pos : challenge.positions()) {
    const double pe = library.at(pos).minority_probability();
    const double mixed = pe * (1.0 - readout_noise) + (1.0 - pe) * readout_noise;
    sum += majority_error_probability(mixed, trials);
  }
  return static_cast<double>(sum / static_cast<long double>(challenge.size()));
}

BerEstimate ber_empirical(const Circuit& circuit, const DeviceLibrary& library, const Challenge& challenge,
                          int trials, std::size_t repetitions, RandomStream& rng, double readout_noise) {
  if (repetitions < 1) throw Error(ErrorCode::InvalidArgument, "at least one repetition is required");
  require_odd(trials);
  challenge.require_within(library.size());

  std::vector<StateClass> expected;
  for (int pos : challenge.positions()) expected.push_back(library.at(pos).majority_state());

  const RandomStream root(static_cast<std::uint64_t>(rng.below(UINT64_MAX)));
  std::vector<std::size_t> errors(kSubstreams, 0);
  {
    std::vector<std::jthread> workers;
    for (std::size_t w = 0; w < kSubstreams; ++w) {
      const std::size_t reps = repetitions / kSubstreams + (w < repetitions % kSubstreams ? 1 : 0);
      workers.emplace_back([&, w, reps] {
        RandomStream stream = root.substream(w);
        std::size_t e = 0;
        for (std::size_t r = 0; r < reps; ++r) {
          const auto resp = respond(circuit, challenge, trials, stream, readout_noise);
          for (std::size_t i = 0; i < expected.size(); ++i) e += resp.states[i] != expected[i];
        }
        errors[w] = e;
      });
    }
  }

  std::size_t total_errors = 0;
  for (auto e : errors) total_errors += e;
  BerEstimate est;
  est.bits = repetitions * challenge.size();
  est.ber = static_cast<double>(total_errors) / static_cast<double>(est.bits);
  est.std_error = std::sqrt(est.ber * (1.0 - est.ber) / static_cast<double>(est.bits));
  return est;
}

std::vector<BerPoint> ber_curve(const DeviceLibrary& library, const Challenge& challenge,
                                std::span<const int> trial_counts) {
  std::vector<BerPoint> out;
  out.reserve(trial_counts.size());
  for (int t : trial_counts) out.push_back({t, ber_closed_form(library, challenge, t)});
  return out;
}

}  // namespace magion
