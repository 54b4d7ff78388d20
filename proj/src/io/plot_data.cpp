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

#include "magion/io/plot_data.hpp"

#include <fmt/core.h>

namespace magion {

std::string fhd_histogram_csv(const FhdResult& result) {
  std::string out = "bin_lo,bin_hi,count\n";
  const double w = result.bin_width();
  for (std::size_t h = 0; h < result.histogram.size(); ++h) {
    out += fmt::format("{:.6f},{:.6f},{}\n", h * w, (h + 1) * w, result.histogram[h]);
  }
  return out;
}

std::string ber_curve_csv(std::span<const BerPoint> curve) {
  std::string out = "T,ber\n";
  for (const auto& p : curve) out += fmt::format("{},{:.9f}\n", p.trials, p.ber);
  return out;
}

std::string inference_csv(const InferenceRun& run) {
  std::string out = "trial,per_trial_prob,cumulative_prob\n";
  for (std::size_t t = 0; t < run.per_trial_prob.size(); ++t) {
    out += fmt::format("{},{:.6f},{:.6f}\n", t + 1, run.per_trial_prob[t], run.cumulative_prob[t]);
  }
  return out;
}

std::string ber_table_csv(const DeviceLibrary& library, std::span<const Challenge> challenges,
                          std::span<const int> trial_counts) {
  std::string out = "dot_positions,n_pbits";
  for (int t : trial_counts) out += fmt::format(",BER_{}", t);
  out += '\n';
  for (const auto& c : challenges) {
    out += fmt::format("\"{}\",{}", c.to_string(), c.pbit_count(library));
    for (int t : trial_counts) out += fmt::format(",{:.3f}", 100.0 * ber_closed_form(library, c, t));
    out += '\n';
  }
  return out;
}

std::string crp_table_csv(std::span<const CrpCandidate> candidates) {
  std::string out = "dot_positions";
  for (const char* s : {"s1", "s2"}) {
    out += fmt::format(",{}_n_pbits", s);
    for (int t : kReportTrials) out += fmt::format(",{}_BER_{}", s, t);
  }
  out += ",pFHD_inter\n";
  for (const auto& c : candidates) {
    out += fmt::format("\"{}\",{}", c.challenge.to_string(), c.pbits1);
    for (double b : c.ber1) out += fmt::format(",{:.3f}", 100.0 * b);
    out += fmt::format(",{}", c.pbits2);
    for (double b : c.ber2) out += fmt::format(",{:.3f}", 100.0 * b);
    out += fmt::format(",{:.4f}\n", c.pfhd);
  }
  return out;
}

double histogram_mean(const FhdResult& result) {
  double weighted = 0.0;
  double pairs = 0.0;
  for (std::size_t h = 0; h < result.histogram.size(); ++h) {
    weighted += static_cast<double>(h) * result.bin_width() * static_cast<double>(result.histogram[h]);
    pairs += static_cast<double>(result.histogram[h]);
  }
  return pairs == 0.0 ? 0.0 : weighted / pairs;
}

}  // namespace magion
