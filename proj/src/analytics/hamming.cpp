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

#include "magion/analytics/hamming.hpp"

#include <cmath>
#include <numeric>

#include <fmt/core.h>

#include "magion/core/error.hpp"

namespace magion {

std::size_t hamming_distance(const DegaussTrace& a, const DegaussTrace& b, const StateMapping& mapping) {
  if (a.states.size() != b.states.size()) {
    throw Error(ErrorCode::LengthMismatch,
                fmt::format("traces of length {} and {}", a.states.size(), b.states.size()));
  }
  std::size_t hd = 0;
  for (std::size_t k = 0; k < a.states.size(); ++k) {
    hd += mapping(a.states[k]) != mapping(b.states[k]) ? 1 : 0;
  }
  return hd;
}

namespace {

std::vector<std::vector<std::uint8_t>> map_all(std::span<const DegaussTrace> traces, const StateMapping& mapping) {
  if (traces.size() < 2) {
    throw Error(ErrorCode::InsufficientData, fmt::format("FHD needs at least two traces, got {}", traces.size()));
  }
  const std::size_t n = traces.front().states.size();
  if (n == 0) throw Error(ErrorCode::InsufficientData, "traces are empty");
  std::vector<std::vector<std::uint8_t>> rows;
  rows.reserve(traces.size());
  for (const auto& t : traces) {
    if (t.states.size() != n) {
      throw Error(ErrorCode::LengthMismatch,
                  fmt::format("trace {} has {} states, expected {}", t.trial_index, t.states.size(), n));
    }
    rows.push_back(mapping.apply(t));
  }
  return rows;
}

}  // namespace

FhdResult fhd_intra(std::span<const DegaussTrace> traces, const StateMapping& mapping) {
  const auto rows = map_all(traces, mapping);
  const std::size_t m = rows.size();
  const std::size_t n = rows.front().size();

  FhdResult result;
  result.sequence_length = n;
  result.histogram.assign(n + 1, 0);
  result.pair_count = m * (m - 1) / 2;
  std::uint64_t hd_total = 0;
  for (std::size_t i = 0; i < m; ++i) {
    const auto& a = rows[i];
    for (std::size_t j = i + 1; j < m; ++j) {
      const auto& b = rows[j];
      std::size_t hd = 0;
      for (std::size_t k = 0; k < n; ++k) hd += a[k] != b[k];
      ++result.histogram[hd];
      hd_total += hd;
    }
  }
  result.mean_fhd = static_cast<double>(hd_total) /
                    (static_cast<double>(result.pair_count) * static_cast<double>(n));
  return result;
}

double fhd_intra_from_counts(const std::vector<std::vector<std::uint8_t>>& symbols,
                             std::span<const std::size_t> rows, std::size_t symbol_count) {
  const std::size_t m = rows.size();
  if (m < 2) throw Error(ErrorCode::InsufficientData, "FHD needs at least two traces");
  const std::size_t n = symbols[rows.front()].size();
  const double pairs = static_cast<double>(m) * static_cast<double>(m - 1) / 2.0;
  std::vector<std::size_t> counts(symbol_count);
  double mismatched = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    std::fill(counts.begin(), counts.end(), 0);
    for (auto r : rows) ++counts[symbols[r][k]];
    double agree = 0.0;
    for (auto c : counts) agree += static_cast<double>(c) * static_cast<double>(c > 0 ? c - 1 : 0) / 2.0;
    mismatched += pairs - agree;
  }
  return mismatched / (pairs * static_cast<double>(n));
}

double fhd_intra_from_counts(std::span<const DegaussTrace> traces, const StateMapping& mapping) {
  const auto rows = map_all(traces, mapping);
  std::vector<std::size_t> idx(rows.size());
  std::iota(idx.begin(), idx.end(), 0);
  return fhd_intra_from_counts(rows, idx, mapping.symbol_count());
}

double expected_fhd(const std::vector<std::vector<double>>& distributions) {
  if (distributions.empty()) throw Error(ErrorCode::InsufficientData, "no dot distributions");
  double sum = 0.0;
  for (std::size_t k = 0; k < distributions.size(); ++k) {
    const auto& d = distributions[k];
    double total = 0.0;
    double collision = 0.0;
    for (double p : d) {
      if (p < 0.0) throw Error(ErrorCode::InvalidProfile, fmt::format("dot {}: negative probability", k + 1));
      total += p;
      collision += p * p;
    }
    if (std::abs(total - 1.0) > 1e-9) {
      throw Error(ErrorCode::InvalidProfile, fmt::format("dot {}: distribution sums to {}", k + 1, total));
    }
    sum += 1.0 - collision;
  }
  return sum / static_cast<double>(distributions.size());
}

std::vector<std::vector<double>> symbol_distributions(const DeviceLibrary& library, const StateMapping& mapping) {
  std::vector<std::vector<double>> out;
  out.reserve(library.size());
  for (const auto& p : library.profiles) out.push_back(mapping.symbol_distribution(p));
  return out;
}

}  // namespace magion
