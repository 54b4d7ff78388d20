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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "fixtures.hpp"
#include "magion/core/error.hpp"
#include "magion/inference/infer.hpp"
#include "magion/inference/pfhd.hpp"
#include "magion/inference/select.hpp"

namespace magion {
namespace {

using SC = StateClass;

TEST(Pfhd, MismatchIdentity) {
  for (double a = 0.0; a <= 1.0; a += 0.01) {
    for (double b = 0.0; b <= 1.0; b += 0.01) {
      const double direct = a * (1 - b) + b * (1 - a);
      EXPECT_NEAR(mismatch_probability(a, b), direct, 1e-12);
      EXPECT_NEAR(mismatch_probability(a, b), mismatch_probability(b, a), 1e-12);
    }
  }
}

TEST(Pfhd, TableValues) {
  const auto& ds = testing::dataset();
  const auto s1 = ds.sample1_circuit_a();
  const auto s2 = ds.sample2_circuit_a();
  EXPECT_NEAR(pfhd_inter(s1, s2, Challenge::parse("5,11,12,14,15")), 0.5002, 1e-4);
  EXPECT_NEAR(pfhd_inter(s1, s2, Challenge::parse("1,5,12,17,18")), 0.600, 0.001);
  for (const auto& row : ds.crps) EXPECT_NEAR(pfhd_inter(s1, s2, row.challenge), row.pfhd, 0.002);
}

TEST(Pfhd, IdenticalVortexLibraries) {
  const auto lib = testing::make_library({0, 0, 0, 0, 0});
  EXPECT_EQ(pfhd_inter(lib, lib, Challenge::parse("1,2,3,4,5")), 0.0);
}

TEST(Select, TargetAndTolerance) {
  const auto& ds = testing::dataset();
  const auto s1 = ds.sample1_circuit_a();
  const auto s2 = ds.sample2_circuit_a();
  const auto found = select_crps(s1, s2, 5, 0.5, 0.01);
  auto has = [&](const std::vector<CrpCandidate>& v, const char* text) {
    const auto c = Challenge::parse(text);
    return std::any_of(v.begin(), v.end(), [&](const CrpCandidate& x) { return x.challenge == c; });
  };
  EXPECT_TRUE(has(found, "5,11,12,14,15"));
  EXPECT_TRUE(has(found, "7,10,11,12,18"));
  for (std::size_t i = 1; i < found.size(); ++i) {
    EXPECT_LE(std::abs(found[i - 1].pfhd - 0.5), std::abs(found[i].pfhd - 0.5) + 1e-15);
  }
  EXPECT_FALSE(has(select_crps(s1, s2, 5, 0.5, 0.0), "3,7,10,14,18"));
  EXPECT_LE(select_crps(s1, s2, 18, 0.5, 1.0).size(), 1u);
}

TEST(Classify, Dot13SdIsLabelOne) {
  const auto& ds = testing::dataset();
  const auto s1 = ds.sample1_circuit_a();
  const auto s2 = ds.sample2_circuit_a();
  const std::vector<SC> obs{SC::SingleDomain};
  EXPECT_EQ(classify_trial(obs, s1, s2, Challenge::parse("13")).labels, std::vector<int>{1});
}

TEST(Classify, TieAbstains) {
  const auto a = testing::make_library({0.3});
  const std::vector<SC> obs{SC::Vortex};
  const auto t = classify_trial(obs, a, a, Challenge::parse("1"));
  EXPECT_EQ(t.labels, std::vector<int>{kAbstain});
  EXPECT_DOUBLE_EQ(t.per_trial_prob, 0.5);
}

TEST(Accumulate, FirstTrialAndEmpty) {
  const auto run = accumulate_labels({{2, 2, 2, 1, 1}});
  EXPECT_NEAR(run.per_trial_prob[0], 0.4, 1e-12);
  EXPECT_EQ(run.decision, Decision::Sample2);
  EXPECT_THROW(accumulate_labels({}), Error);
  EXPECT_EQ(accumulate_labels({{1, 2}}).decision, Decision::Undecided);
}

TEST(Infer, RecordedLabelReplay) {
  const auto& ds = testing::dataset();
  const auto s1 = ds.sample1_circuit_a();
  const auto s2 = ds.sample2_circuit_a();
  const Challenge ch(ds.replay.positions);
  std::vector<std::vector<SC>> obs;
  for (const auto& row : ds.replay.labels) {
    std::vector<SC> o;
    for (std::size_t i = 0; i < row.size(); ++i) o.push_back(observation_for_label(s1, s2, ch.positions()[i], row[i]));
    obs.push_back(o);
  }
  const auto run = infer(obs, s1, s2, ch);
  ASSERT_EQ(run.cumulative_prob.size(), 27u);
  EXPECT_EQ(run.trial_labels, ds.replay.labels);
  for (std::size_t t = 0; t < 27; ++t) {
    EXPECT_NEAR(100 * run.per_trial_prob[t], ds.replay.per_trial_pct[t], 1e-9);
    if (ds.replay.cumulative_pct[t]) EXPECT_NEAR(100 * run.cumulative_prob[t], *ds.replay.cumulative_pct[t], 0.1) << t;
  }
  EXPECT_LT(run.cumulative_prob[2], 0.5);
  EXPECT_GT(run.cumulative_prob[3], 0.5);
  EXPECT_EQ(run.decision, Decision::Sample1);
}

TEST(Infer, MajorityStreamIsCertain) {
  const auto s1 = testing::make_library({0.9, 0.1, 0.8});
  const auto s2 = testing::make_library({0.2, 0.7, 0.3});
  const std::vector<std::vector<SC>> obs(4, {SC::SingleDomain, SC::Vortex, SC::SingleDomain});
  const auto run = infer(obs, s1, s2, Challenge::parse("1,2,3"));
  for (double c : run.cumulative_prob) EXPECT_DOUBLE_EQ(c, 1.0);
}

TEST(PoissonBinomial, MatchesEnumeration) {
  const std::vector<double> p{0.911, 0.758, 0.419, 0.935, 0.844};
  std::vector<double> oracle(6, 0.0);
  for (unsigned mask = 0; mask < 32; ++mask) {
    double prob = 1.0;
    for (int i = 0; i < 5; ++i) prob *= (mask >> i & 1) ? p[i] : 1 - p[i];
    oracle[__builtin_popcount(mask)] += prob;
  }
  const auto pb = poisson_binomial(p);
  ASSERT_EQ(pb.size(), 6u);
  for (int i = 0; i < 6; ++i) EXPECT_NEAR(pb[i], oracle[i], 1e-14);
}

TEST(AcceptProbability, ReferenceChallenge) {
  const auto& ds = testing::dataset();
  const auto s1 = ds.sample1_circuit_a();
  const auto s2 = ds.sample2_circuit_a();
  const auto a = per_trial_accept_prob(s1, s1, s2, Challenge::parse("13,7,9,18,17"));
  const std::vector<double> expected{0.911, 0.758, 0.419, 0.935, 0.844};
  for (int i = 0; i < 5; ++i) EXPECT_NEAR(a.label1[i], expected[i], 1e-12);
  EXPECT_NEAR(a.expected_per_trial, 0.7734, 1e-12);
  const auto det = testing::make_library({1, 1, 1});
  const auto other = testing::make_library({0, 0, 0});
  EXPECT_DOUBLE_EQ(per_trial_accept_prob(det, det, other, Challenge::parse("1,2,3")).majority, 1.0);
}

TEST(SimulateInference, ConvergesAndIsDeterministic) {
  const auto& ds = testing::dataset();
  const auto s1 = ds.sample1_circuit_a();
  const auto s2 = ds.sample2_circuit_a();
  const auto ch = Challenge::parse("13,7,9,18,17");
  RandomStream a(21), b(21);
  const auto x = simulate_inference(Circuit::from_library(s1), s1, s2, ch, 27, 500, a);
  const auto y = simulate_inference(Circuit::from_library(s1), s1, s2, ch, 27, 500, b);
  EXPECT_EQ(x.mean_per_trial, y.mean_per_trial);
  EXPECT_EQ(x.decided_sample1, y.decided_sample1);
  EXPECT_NEAR(x.mean_per_trial, 0.7734, 4 * x.per_trial_std_error);
  EXPECT_GE(x.decided_sample1, 0.85);
}

}  // namespace
}  // namespace magion
