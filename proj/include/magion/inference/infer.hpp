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
#include <string_view>
#include <vector>

#include "magion/core/device.hpp"
#include "magion/core/random.hpp"
#include "magion/puf/challenge.hpp"

namespace magion {

enum class Decision { Sample1, Sample2, Undecided };

std::string_view to_string(Decision d);

/// Label codes: 1 and 2 name the more likely library, 0 is an abstention
/// (both libraries give the observed class the same probability).
inline constexpr int kAbstain = 0;

struct TrialClassification {
  std::vector<int> labels;
  double per_trial_prob = 0.0;  // share of dots labelled 1, abstentions count one half
};

/// Labels each observed dot with the library under which its observed class
/// is more probable.
TrialClassification classify_trial(std::span<const StateClass> observation, const DeviceLibrary& lib1,
                                   const DeviceLibrary& lib2, const Challenge& challenge);

struct InferenceRun {
  std::vector<std::vector<int>> trial_labels;
  std::vector<double> per_trial_prob;
  std::vector<double> cumulative_prob;  // running mean of per_trial_prob
  Decision decision = Decision::Undecided;
};

/// Cumulative averaging over already-labelled trials. The decision uses
/// strict inequality against 0.5. Throws InsufficientData for no trials.
InferenceRun accumulate_labels(const std::vector<std::vector<int>>& labels);

/// classify_trial on every observation followed by accumulate_labels.
InferenceRun infer(const std::vector<std::vector<StateClass>>& observations, const DeviceLibrary& lib1,
                   const DeviceLibrary& lib2, const Challenge& challenge);

/// Class that produces `label` at a position, for replaying recorded labels.
/// Throws InvalidArgument when no class yields it.
StateClass observation_for_label(const DeviceLibrary& lib1, const DeviceLibrary& lib2, int position, int label);

/// Distribution of the number of successes among independent Bernoulli
/// trials with the given probabilities (exact convolution).
std::vector<double> poisson_binomial(std::span<const double> probabilities);

struct AcceptProbability {
  std::vector<double> label1;    // per dot, P(label = 1) under the true library
  std::vector<double> abstain;   // per dot, P(abstention)
  double expected_per_trial = 0.0;
  double majority = 0.0;         // P(at least ceil((k+1)/2) dots labelled 1)
};

AcceptProbability per_trial_accept_prob(const DeviceLibrary& truth, const DeviceLibrary& lib1,
                                        const DeviceLibrary& lib2, const Challenge& challenge);

/// `trials` single-readout observations of the challenged dots.
std::vector<std::vector<StateClass>> observe(const Circuit& truth, const Challenge& challenge, int trials,
                                             RandomStream& rng);

struct InferenceStudy {
  std::size_t runs = 0;
  int trials = 0;
  double decided_sample1 = 0.0;   // share of runs ending in Sample1
  double decided_sample2 = 0.0;
  double mean_per_trial = 0.0;
  double per_trial_std_error = 0.0;
  double single_trial_majority = 0.0;  // share of trials with a label-1 majority
};

/// Independent inference runs against a simulated device. Run r draws from
/// sub-stream r of a root derived from `rng`.
InferenceStudy simulate_inference(const Circuit& truth, const DeviceLibrary& lib1, const DeviceLibrary& lib2,
                                  const Challenge& challenge, int trials, std::size_t runs, RandomStream& rng);

}  // namespace magion
