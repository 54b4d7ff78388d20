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

#include <array>
#include <cstddef>
#include <vector>

#include "magion/core/profile.hpp"
#include "magion/puf/challenge.hpp"

namespace magion {

/// Trial counts reported for every selected CRP.
inline constexpr std::array<int, 4> kReportTrials{1, 5, 11, 27};

struct CrpCandidate {
  Challenge challenge;
  double pfhd = 0.0;
  std::size_t pbits1 = 0;
  std::size_t pbits2 = 0;
  std::array<double, 4> ber1{};  // at kReportTrials, fraction
  std::array<double, 4> ber2{};
};

/// Annotates one challenge with p-bit counts, closed-form BER and pFHD.
CrpCandidate describe_crp(const DeviceLibrary& lib1, const DeviceLibrary& lib2, const Challenge& challenge);

/// Exhaustive search over all C(N,k) ascending position subsets for
/// |pFHD - target| <= tolerance, ranked by closeness (ties by position).
std::vector<CrpCandidate> select_crps(const DeviceLibrary& lib1, const DeviceLibrary& lib2, std::size_t k,
                                      double target, double tolerance);

}  // namespace magion
