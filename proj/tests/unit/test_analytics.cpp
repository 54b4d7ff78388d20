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

#include <cmath>

#include "fixtures.hpp"
#include "magion/analytics/entropy.hpp"
#include "magion/analytics/hamming.hpp"
#include "magion/analytics/mapping.hpp"
#include "magion/analytics/trng.hpp"
#include "magion/core/error.hpp"
#include "magion/core/sampling.hpp"

namespace magion {
namespace {

using MS = MagneticState;

DegaussTrace trace(std::initializer_list<int> codes) {
  DegaussTrace t;
  for (int c : codes) t.states.push_back(static_cast<MagneticState>(c));
  return t;
}

// Brute-force pairwise mean over all ordered-free pairs.
double fhd_oracle(const std::vector<DegaussTrace>& traces, const StateMapping& m) {
  double sum = 0;
  int pairs = 0;
  for (std::size_t i = 0; i < traces.size(); ++i) {
    for (std::size_t j = i + 1; j < traces.size(); ++j) {
      int hd = 0;
      for (std::size_t k = 0; k < traces[i].states.size(); ++k) hd += m(traces[i].states[k]) != m(traces[j].states[k]);
      sum += hd;
      ++pairs;
    }
  }
  return sum / pairs / static_cast<double>(traces[0].states.size());
}

TEST(Mapping, DefaultGroupings) {
  const auto b = StateMapping::binary_direction();
  EXPECT_EQ(b(MS::SdRight), 1);
  EXPECT_EQ(b(MS::VortexCw), 1);
  EXPECT_EQ(b(MS::SdLeft), 0);
  EXPECT_EQ(b(MS::VortexCcw), 0);
  EXPECT_THROW(b(MS::ParamagneticOff), Error);
  const auto f = StateMapping::four_state();
  EXPECT_EQ(f(MS::VortexCcw), 3);
  EXPECT_THROW(StateMapping::custom(MappingMode::BinaryDirection, {0, 2, 1, 0}), Error);
  EXPECT_THROW(parse_mapping("hex"), Error);
}

TEST(Hamming, HandExamples) {
  const auto four = StateMapping::four_state();
  EXPECT_EQ(hamming_distance(trace({1, 2}), trace({1, 2}), four), 0u);
  EXPECT_EQ(hamming_distance(trace({1, 2}), trace({2, 1}), four), 2u);
  EXPECT_EQ(hamming_distance(trace({1, 4, 2}), trace({3, 4, 3}), StateMapping::binary_direction()), 1u);
}

TEST(Hamming, ErrorPaths) {
  const auto four = StateMapping::four_state();
  try {
    hamming_distance(trace({1, 2}), trace({1}), four);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::LengthMismatch);
  }
  try {
    hamming_distance(trace({0, 2}), trace({1, 2}), four);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::OffState);
  }
}

TEST(FhdIntra, ThreeTraceExample) {
  const std::vector<DegaussTrace> t{trace({1, 2}), trace({1, 3}), trace({2, 2})};
  const auto r = fhd_intra(t, StateMapping::four_state());
  EXPECT_NEAR(r.mean_fhd, 4.0 / 6.0, 1e-12);
  EXPECT_EQ(r.pair_count, 3u);
  EXPECT_EQ(r.histogram, (std::vector<std::size_t>{0, 2, 1}));
  EXPECT_NEAR(fhd_intra_from_counts(t, StateMapping::four_state()), r.mean_fhd, 1e-12);
}

TEST(FhdIntra, IdenticalTracesAndTooFew) {
  const std::vector<DegaussTrace> same(5, trace({1, 3, 4}));
  EXPECT_EQ(fhd_intra(same, StateMapping::four_state()).mean_fhd, 0.0);
  const std::vector<DegaussTrace> one{trace({1})};
  EXPECT_THROW(fhd_intra(one, StateMapping::four_state()), Error);
}

TEST(FhdIntra, BoundsRelabelInvarianceAndOracle) {
  const auto lib = testing::make_library({0.1, 0.3, 0.5 + 1e-3, 0.8, 0.95, 0.2, 0.6}, 0.35);
  const auto c = Circuit::from_library(lib);
  RandomStream rng(99);
  const auto traces = degauss_series(c, 60, rng);
  const auto four = StateMapping::four_state();
  const auto relabelled = StateMapping::custom(MappingMode::FourState, {2, 0, 3, 1});
  const double a = fhd_intra(traces, four).mean_fhd;
  EXPECT_GE(a, 0.0);
  EXPECT_LE(a, 1.0);
  EXPECT_NEAR(a, fhd_intra(traces, relabelled).mean_fhd, 1e-12);
  EXPECT_NEAR(a, fhd_oracle(traces, four), 1e-12);
  const auto b = StateMapping::binary_direction();
  EXPECT_NEAR(fhd_intra(traces, b).mean_fhd, fhd_oracle(traces, b), 1e-12);
  EXPECT_NEAR(fhd_intra(traces, b).mean_fhd,
              fhd_intra(traces, StateMapping::custom(MappingMode::BinaryDirection, {0, 1, 0, 1})).mean_fhd, 1e-12);
}

TEST(ExpectedFhd, CollisionFormula) {
  EXPECT_NEAR(expected_fhd({{0.5, 0.5}}), 0.5, 1e-15);
  EXPECT_NEAR(expected_fhd({{0.25, 0.25, 0.25, 0.25}}), 0.75, 1e-15);
  EXPECT_THROW(expected_fhd({{0.5, 0.6}}), Error);
}

TEST(ExpectedFhd, CircuitABinaryInRange) {
  const auto lib = testing::dataset().sample1_circuit_a();
  const double e = expected_fhd(symbol_distributions(lib, StateMapping::binary_direction()));
  // 1 - sum p^2 per dot, averaged: independent evaluation from the table.
  double oracle = 0;
  for (const auto& row : testing::dataset().circuit_a_direction) {
    const double p = row.p_rcw_pct / 100.0;
    oracle += 2 * p * (1 - p);
  }
  oracle /= 18.0;
  EXPECT_NEAR(e, oracle, 1e-12);
  EXPECT_GE(e, 0.49);
  EXPECT_LE(e, 0.50);
}

TEST(Entropy, BinaryEntropyPoints) {
  EXPECT_DOUBLE_EQ(shannon_entropy_bit(0.5), 1.0);
  EXPECT_EQ(shannon_entropy_bit(1.0), 0.0);
  EXPECT_EQ(shannon_entropy_bit(0.0), 0.0);
  EXPECT_NEAR(shannon_entropy_bit(0.6129), 0.963, 0.0005);
  for (double p = 0.01; p < 1.0; p += 0.01) EXPECT_NEAR(shannon_entropy_bit(p), shannon_entropy_bit(1 - p), 1e-12);
}

TEST(Entropy, TablesPerBitAndMeans) {
  const auto& ds = testing::dataset();
  const auto b = total_entropy(ds.sample1_circuit_b());
  const auto a = total_entropy(ds.sample1_circuit_a());
  ASSERT_EQ(b.per_bit.size(), 24u);
  ASSERT_EQ(a.per_bit.size(), 18u);
  for (std::size_t i = 0; i < 24; ++i) EXPECT_NEAR(b.per_bit[i], ds.circuit_b_direction[i].entropy, 0.001) << i;
  for (std::size_t i = 0; i < 18; ++i) EXPECT_NEAR(a.per_bit[i], ds.circuit_a_direction[i].entropy, 0.001) << i;
  EXPECT_NEAR(b.mean, 0.97, 0.005);
  EXPECT_NEAR(a.mean, 0.99, 0.005);
}

TEST(Entropy, AllFairIsN) {
  const std::vector<double> half(13, 0.5);
  EXPECT_DOUBLE_EQ(total_entropy(half).total, 13.0);
}

TEST(SequenceCount, Values) {
  EXPECT_EQ(sequence_count(0.0), 1.0L);
  EXPECT_EQ(sequence_count(41.0), 2199023255552.0L);
  const auto b = total_entropy(testing::dataset().sample1_circuit_b());
  EXPECT_NEAR(static_cast<double>(sequence_count(b.total)) / 9.84e6, 1.0, 0.0006);
}

TEST(LockStrength, SingleCoinAndHundredDots) {
  const auto one = lock_strength(1.0, 1, 1.0);
  EXPECT_EQ(one.sequences, 2.0L);
  EXPECT_NEAR(static_cast<double>(one.seconds), 2.0, 1e-12);
  const auto big = lock_strength(98.0, 100, 1e9);
  EXPECT_NEAR(static_cast<double>(big.sequences) / 3.17e29, 1.0, 0.0016);
  EXPECT_NEAR(static_cast<double>(big.years) / 1e13, 1.0, 0.1);
}

TEST(LockStrength, CircuitsAAndB) {
  const auto& ds = testing::dataset();
  const std::vector<DeviceLibrary> libs{ds.sample1_circuit_a(), ds.sample1_circuit_b()};
  const auto s = lock_strength(libs, 1e9);
  EXPECT_EQ(s.dots, 42u);
  EXPECT_LT(std::abs(std::log2(static_cast<double>(s.sequences) / 2.21e12)), 1.0);
}

TEST(Trng, ExtractAndStatistics) {
  EXPECT_EQ(to_bitstring(extract_bits(trace({1, 3, 2}), StateMapping::binary_direction())), "110");
  EXPECT_THROW(extract_bits(trace({1, 3}), StateMapping::four_state()), Error);

  const auto lib = testing::make_library(std::vector<double>(100, 0.3), 0.5);
  RandomStream rng(314);
  const auto traces = degauss_series(Circuit::from_library(lib), 1000, rng);
  const auto bits = extract_stream(traces, StateMapping::binary_direction());
  ASSERT_EQ(bits.size(), 100000u);
  EXPECT_LT(monobit_statistic(bits), 4.0);
  EXPECT_LT(std::abs(runs_test(bits).z), 4.0);
}

TEST(Trng, CircuitBTraceLength) {
  RandomStream rng(8);
  const auto t = degauss_sample(Circuit::from_library(testing::dataset().sample1_circuit_b()), rng);
  EXPECT_EQ(extract_bits(t, StateMapping::binary_direction()).size(), 24u);
}

TEST(Trng, RunsOnAlternatingStream) {
  const BitStream alt{0, 1, 0, 1, 0, 1, 0, 1};
  EXPECT_EQ(runs_test(alt).runs, 8u);
  EXPECT_NEAR(runs_test(alt).expected, 5.0, 1e-12);
  EXPECT_EQ(monobit_statistic(alt), 0.0);
}

}  // namespace
}  // namespace magion
