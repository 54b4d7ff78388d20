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
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "magion/core/profile.hpp"
#include "magion/puf/challenge.hpp"

namespace magion {

/// Orientation/chirality statistics of one dot, in percent as printed.
struct DirectionRow {
  int dot = 0;
  double p_rcw_pct = 0.0;
  double p_lccw_pct = 0.0;
  double entropy = 0.0;
};

/// SD/vortex probabilities of one dot for both samples, in percent.
struct EnrolledRow {
  int dot = 0;
  double s1_p_sd_pct = 0.0;
  double s1_p_v_pct = 0.0;
  StateClass s1_majority = StateClass::Vortex;
  double s2_p_sd_pct = 0.0;
  double s2_p_v_pct = 0.0;
  StateClass s2_majority = StateClass::Vortex;
};

/// One representative CRP with its reported BER (percent) and pFHD.
struct ReportedCrp {
  Challenge challenge{{1}};
  int pbits1 = 0;
  std::array<double, 4> ber1_pct{};
  int pbits2 = 0;
  std::array<double, 4> ber2_pct{};
  double pfhd = 0.0;
};

/// Recorded per-trial labels of the five-dot inference demonstration.
struct LabelReplay {
  std::vector<int> positions;
  std::vector<std::vector<int>> labels;               // [trial][dot]
  std::vector<double> per_trial_pct;
  std::vector<std::optional<double>> cumulative_pct;  // printed only on some trials
};

/// Transcribed measurement tables shipped under data/measured, verified
/// against data/SHA256SUMS on load.
struct PaperDataset {
  std::filesystem::path root;
  std::vector<DirectionRow> circuit_b_direction;  // 24 dots, sample 1
  std::vector<DirectionRow> circuit_a_direction;  // 18 dots, sample 1
  std::vector<EnrolledRow> enrolled;              // 18 dots, samples 1 and 2
  std::vector<ReportedCrp> crps;
  LabelReplay replay;

  /// Throws Io for missing files, Checksum for a manifest mismatch and
  /// Schema for malformed rows.
  static PaperDataset load(const std::filesystem::path& data_dir, bool verify_checksums = true);

  /// Libraries assembled from the tables (see the data README for the
  /// placeholders used where a quantity was not measured).
  DeviceLibrary sample1_circuit_a() const;
  DeviceLibrary sample2_circuit_a() const;
  DeviceLibrary sample1_circuit_b() const;
};

/// Uniform SD probability assumed for every circuit-B dot.
inline constexpr double kCircuitBPlaceholderPsd = 0.087;

/// Compiled-in data directory.
std::filesystem::path default_data_dir();

/// Verifies every entry of `<data_dir>/SHA256SUMS`. Throws Checksum or Io.
void verify_manifest(const std::filesystem::path& data_dir);

/// Rewrites the shipped library files from the tables and regenerates the
/// manifest. Returns the written paths.
std::vector<std::filesystem::path> rebuild_dataset_files(const std::filesystem::path& data_dir);

}  // namespace magion
