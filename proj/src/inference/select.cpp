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

#include "magion/inference/select.hpp"

#include <algorithm>
#include <cmath>

#include "magion/core/error.hpp"
#include "magion/inference/pfhd.hpp"
#include "magion/puf/ber.hpp"

namespace magion {

namespace {

// Per-dot post-vote error at each reported trial count.
std::vector<std::array<double, 4>> dot_ber_table(const DeviceLibrary& lib) {
  std::vector<std::array<double, 4>> table(lib.size());
  for (std::size_t i = 0; i < lib.size(); ++i) {
    for (std::size_t t = 0; t < kReportTrials.size(); ++t) {
      table[i][t] = static_cast<double>(
          majority_error_probability(lib.profiles[i].minority_probability(), kReportTrials[t]));
    }
  }
  return table;
}

CrpCandidate annotate(const DeviceLibrary& lib1, const DeviceLibrary& lib2, const Challenge& challenge,
                      const std::vector<std::array<double, 4>>& ber_dots1,
                      const std::vector<std::array<double, 4>>& ber_dots2) {
  CrpCandidate c{challenge, pfhd_inter(lib1, lib2, challenge), challenge.pbit_count(lib1),
                 challenge.pbit_count(lib2), {}, {}};
  for (int pos : challenge.positions()) {
    for (std::size_t t = 0; t < kReportTrials.size(); ++t) {
      c.ber1[t] += ber_dots1[static_cast<std::size_t>(pos - 1)][t];
      c.ber2[t] += ber_dots2[static_cast<std::size_t>(pos - 1)][t];
    }
  }
  const double k = static_cast<double>(challenge.size());
  for (std::size_t t = 0; t < kReportTrials.size(); ++t) {
    c.ber1[t] /= k;
    c.ber2[t] /= k;
  }
  return c;
}

}  // namespace

CrpCandidate describe_crp(const DeviceLibrary& lib1, const DeviceLibrary& lib2, const Challenge& challenge) {
  challenge.require_within(std::min(lib1.size(), lib2.size()));
  return annotate(lib1, lib2, challenge, dot_ber_table(lib1), dot_ber_table(lib2));
}

std::vector<CrpCandidate> select_crps(const DeviceLibrary& lib1, const DeviceLibrary& lib2, std::size_t k,
                                      double target, double tolerance) {
  const std::size_t n = std::min(lib1.size(), lib2.size());
  if (k < 1 || k > n) {
    throw Error(ErrorCode::InvalidArgument, "challenge size must be between 1 and the library size");
  }
  const auto ber1 = dot_ber_table(lib1);
  const auto ber2 = dot_ber_table(lib2);

  // Per-dot mismatch probabilities; subsets only need sums.
  std::vector<double> mismatch(n);
  for (std::size_t i = 0; i < n; ++i) {
    mismatch[i] = mismatch_probability(lib1.profiles[i].p_v(), lib2.profiles[i].p_v());
  }

  std::vector<CrpCandidate> out;
  std::vector<int> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = static_cast<int>(i);
  while (true) {
    double sum = 0.0;
    for (int i : idx) sum += mismatch[static_cast<std::size_t>(i)];
    const double pfhd = sum / static_cast<double>(k);
    if (std::abs(pfhd - target) <= tolerance + 1e-12) {
      std::vector<int> positions(k);
      for (std::size_t i = 0; i < k; ++i) positions[i] = idx[i] + 1;
      out.push_back(annotate(lib1, lib2, Challenge(std::move(positions)), ber1, ber2));
    }
    // next combination in lexicographic order
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == static_cast<int>(n - k + i - 1)) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }

  std::stable_sort(out.begin(), out.end(), [&](const CrpCandidate& a, const CrpCandidate& b) {
    return std::abs(a.pfhd - target) < std::abs(b.pfhd - target);
  });
  return out;
}

}  // namespace magion
