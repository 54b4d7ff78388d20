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

#include "magion/inference/infer.hpp"

#include <cmath>
#include <thread>

#include <fmt/core.h>

#include "magion/core/error.hpp"
#include "magion/core/sampling.hpp"

namespace magion {

namespace {

constexpr std::size_t kSubstreams = 8;

int label_for(const DeviceLibrary& lib1, const DeviceLibrary& lib2, int position, StateClass observed) {
  const double p1 = lib1.at(position).probability_of(observed);
  const double p2 = lib2.at(position).probability_of(observed);
  if (p1 > p2) return 1;
  if (p2 > p1) return 2;
  return kAbstain;
}

double label_score(int label) {
  if (label == 1) return 1.0;
  if (label == kAbstain) return 0.5;
  return 0.0;
}

}  // namespace

std::string_view to_string(Decision d) {
  switch (d) {
    case Decision::Sample1: return "sample1";
    case Decision::Sample2: return "sample2";
    case Decision::Undecided: return "undecided";
  }
  return "undecided";
}

TrialClassification classify_trial(std::span<const StateClass> observation, const DeviceLibrary& lib1,
                                   const DeviceLibrary& lib2, const Challenge& challenge) {
  if (observation.size() != challenge.size()) {
    throw Error(ErrorCode::LengthMismatch, fmt::format("observation has {} entries for a {}-dot challenge",
                                                       observation.size(), challenge.size()));
  }
  TrialClassification out;
  out.labels.reserve(challenge.size());
  double score = 0.0;
  for (std::size_t i = 0; i < challenge.size(); ++i) {
    out.labels.push_back(label_for(lib1, lib2, challenge.positions()[i], observation[i]));
    score += label_score(out.labels.back());
  }
  out.per_trial_prob = score / static_cast<double>(challenge.size());
  return out;
}

InferenceRun accumulate_labels(const std::vector<std::vector<int>>& labels) {
  if (labels.empty()) throw Error(ErrorCode::InsufficientData, "inference needs at least one trial");
  InferenceRun run;
  run.trial_labels = labels;
  double running = 0.0;
  for (std::size_t t = 0; t < labels.size(); ++t) {
    const auto& row = labels[t];
    if (row.empty()) throw Error(ErrorCode::InsufficientData, "trial with no labelled dots");
    double score = 0.0;
    for (int l : row) {
      if (l != 1 && l != 2 && l != kAbstain) {
        throw Error(ErrorCode::InvalidArgument, fmt::format("label {} is not 0, 1 or 2", l));
      }
      score += label_score(l);
    }
    run.per_trial_prob.push_back(score / static_cast<double>(row.size()));
    running += run.per_trial_prob.back();
    run.cumulative_prob.push_back(running / static_cast<double>(t + 1));
  }
  const double final_prob = run.cumulative_prob.back();
  run.decision = final_prob > 0.5 ? Decision::Sample1 : final_prob < 0.5 ? Decision::Sample2 : Decision::Undecided;
  return run;
}

InferenceRun infer(const std::vector<std::vector<StateClass>>& observations, const DeviceLibrary& lib1,
                   const DeviceLibrary& lib2, const Challenge& challenge) {
  if (observations.empty()) throw Error(ErrorCode::InsufficientData, "inference needs at least one trial");
  std::vector<std::vector<int>> labels;
  labels.reserve(observations.size());
  for (const auto& obs : observations) labels.push_back(classify_trial(obs, lib1, lib2, challenge).labels);
  return accumulate_labels(labels);
}

StateClass observation_for_label(const DeviceLibrary& lib1, const DeviceLibrary& lib2, int position, int label) {
  for (auto cls : {StateClass::SingleDomain, StateClass::Vortex}) {
    if (label_for(lib1, lib2, position, cls) == label) return cls;
  }
  throw Error(ErrorCode::InvalidArgument,
              fmt::format("no observation at dot {} produces label {}", position, label));
}

std::vector<double> poisson_binomial(std::span<const double> probabilities) {
  std::vector<double> dist{1.0};
  for (double p : probabilities) {
    std::vector<double> next(dist.size() + 1, 0.0);
    for (std::size_t j = 0; j < dist.size(); ++j) {
      next[j] += dist[j] * (1.0 - p);
      next[j + 1] += dist[j] * p;
    }
    dist = std::move(next);
  }
  return dist;
}

AcceptProbability per_trial_accept_prob(const DeviceLibrary& truth, const DeviceLibrary& lib1,
                                        const DeviceLibrary& lib2, const Challenge& challenge) {
  AcceptProbability out;
  double expected = 0.0;
  for (int pos : challenge.positions()) {
    double p1 = 0.0;
    double p0 = 0.0;
    for (auto cls : {StateClass::SingleDomain, StateClass::Vortex}) {
      const double p = truth.at(pos).probability_of(cls);
      const int label = label_for(lib1, lib2, pos, cls);
      if (label == 1) p1 += p;
      if (label == kAbstain) p0 += p;
    }
    out.label1.push_back(p1);
    out.abstain.push_back(p0);
    expected += p1 + 0.5 * p0;
  }
  const std::size_t k = challenge.size();
  out.expected_per_trial = expected / static_cast<double>(k);
  const auto dist = poisson_binomial(out.label1);
  const std::size_t need = (k + 2) / 2;  // ceil((k+1)/2)
  for (std::size_t j = need; j < dist.size(); ++j) out.majority += dist[j];
  return out;
}

std::vector<std::vector<StateClass>> observe(const Circuit& truth, const Challenge& challenge, int trials,
                                             RandomStream& rng) {
  if (trials < 1) throw Error(ErrorCode::InvalidArgument, "at least one trial is required");
  challenge.require_within(truth.size());
  if (!truth.active()) {
    throw Error(ErrorCode::InactiveDot, fmt::format("circuit '{}' was never gated", truth.id()));
  }
  std::vector<std::vector<StateClass>> out;
  out.reserve(static_cast<std::size_t>(trials));
  for (int t = 0; t < trials; ++t) {
    const auto trace = degauss_sample(truth, rng, static_cast<std::size_t>(t));
    std::vector<StateClass> obs;
    obs.reserve(challenge.size());
    for (int pos : challenge.positions()) obs.push_back(state_class(trace.states[static_cast<std::size_t>(pos - 1)]));
    out.push_back(std::move(obs));
  }
  return out;
}

InferenceStudy simulate_inference(const Circuit& truth, const DeviceLibrary& lib1, const DeviceLibrary& lib2,
                                  const Challenge& challenge, int trials, std::size_t runs, RandomStream& rng) {
  if (runs < 1) throw Error(ErrorCode::InvalidArgument, "at least one run is required");
  const RandomStream root(rng.below(UINT64_MAX));
  const std::size_t need = (challenge.size() + 2) / 2;

  struct Tally {
    std::size_t s1 = 0, s2 = 0, majority = 0;
    double sum = 0.0, sum_sq = 0.0;
  };
  std::vector<Tally> tallies(kSubstreams);
  {
    std::vector<std::jthread> workers;
    for (std::size_t w = 0; w < kSubstreams; ++w) {
      workers.emplace_back([&, w] {
        Tally& tally = tallies[w];
        for (std::size_t r = w; r < runs; r += kSubstreams) {
          RandomStream stream = root.substream(r);
          const auto run = infer(observe(truth, challenge, trials, stream), lib1, lib2, challenge);
          tally.s1 += run.decision == Decision::Sample1;
          tally.s2 += run.decision == Decision::Sample2;
          for (std::size_t t = 0; t < run.per_trial_prob.size(); ++t) {
            const double p = run.per_trial_prob[t];
            tally.sum += p;
            tally.sum_sq += p * p;
            std::size_t ones = 0;
            for (int l : run.trial_labels[t]) ones += l == 1;
            tally.majority += ones >= need;
          }
        }
      });
    }
  }

  Tally total;
  for (const auto& t : tallies) {
    total.s1 += t.s1;
    total.s2 += t.s2;
    total.majority += t.majority;
    total.sum += t.sum;
    total.sum_sq += t.sum_sq;
  }
  InferenceStudy study;
  study.runs = runs;
  study.trials = trials;
  const double n_runs = static_cast<double>(runs);
  const double n_trials = n_runs * trials;
  study.decided_sample1 = static_cast<double>(total.s1) / n_runs;
  study.decided_sample2 = static_cast<double>(total.s2) / n_runs;
  study.mean_per_trial = total.sum / n_trials;
  const double var = std::max(0.0, total.sum_sq / n_trials - study.mean_per_trial * study.mean_per_trial);
  study.per_trial_std_error = std::sqrt(var / n_trials);
  study.single_trial_majority = static_cast<double>(total.majority) / n_trials;
  return study;
}

}  // namespace magion
