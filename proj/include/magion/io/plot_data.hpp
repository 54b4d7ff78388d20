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

#include <filesystem>
#include <span>
#include <string>

#include "magion/analytics/hamming.hpp"
#include "magion/core/profile.hpp"
#include "magion/inference/select.hpp"
#include "magion/inference/infer.hpp"
#include "magion/puf/ber.hpp"

namespace magion {

/// `bin_lo,bin_hi,count`, one row per Hamming-distance bin of width 1/N.
/// An empty histogram yields the header only.
std::string fhd_histogram_csv(const FhdResult& result);

/// `T,ber` rows.
std::string ber_curve_csv(std::span<const BerPoint> curve);

/// `trial,per_trial_prob,cumulative_prob`, 1-based trials.
std::string inference_csv(const InferenceRun& run);

/// Table of closed-form BER (percent) for one library:
/// `dot_positions,n_pbits,BER_<T>...`.
std::string ber_table_csv(const DeviceLibrary& library, std::span<const Challenge> challenges,
                          std::span<const int> trial_counts);

/// Two-sample CRP table: positions, then p-bit count and BER at T = 1, 5,
/// 11, 27 (percent) for each library, then pFHD_inter.
std::string crp_table_csv(std::span<const CrpCandidate> candidates);

/// Mean FHD recovered from the histogram (pair-weighted bin lower edges).
double histogram_mean(const FhdResult& result);

}  // namespace magion
