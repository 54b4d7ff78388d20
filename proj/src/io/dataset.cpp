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

#include "magion/io/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <map>

#include <fmt/core.h>

#include "csv.hpp"
#include "magion/core/device.hpp"
#include "magion/core/error.hpp"
#include "magion/io/checksum.hpp"
#include "magion/io/device_io.hpp"
#include "magion/io/library_io.hpp"

namespace magion {

namespace fs = std::filesystem;

namespace {

constexpr const char* kManifest = "SHA256SUMS";
constexpr const char* kCircuitB = "measured/circuit_b_direction.csv";
constexpr const char* kCircuitA = "measured/circuit_a_direction.csv";
constexpr const char* kEnrolled = "measured/enrolled_probabilities.csv";
constexpr const char* kCrps = "measured/reference_crps.csv";
constexpr const char* kReplay = "measured/inference_labels.csv";

double to_double(const std::string& s, std::string_view where) {
  double v = 0.0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || p != s.data() + s.size()) {
    throw Error(ErrorCode::Schema, fmt::format("{}: '{}' is not a number", where, s));
  }
  return v;
}

int to_int(const std::string& s, std::string_view where) {
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || p != s.data() + s.size()) {
    throw Error(ErrorCode::Schema, fmt::format("{}: '{}' is not an integer", where, s));
  }
  return v;
}

// Rows of a CSV file after checking its header.
std::vector<std::vector<std::string>> read_table(const fs::path& path, std::size_t columns,
                                                 std::vector<std::string>* header_out = nullptr) {
  const auto text = read_file(path);
  const auto lines = detail::split_lines(text);
  if (lines.empty()) throw Error(ErrorCode::Schema, fmt::format("{}: empty table", path.string()));
  auto header = detail::split_csv_record(lines.front());
  if (header.size() != columns) {
    throw Error(ErrorCode::Schema, fmt::format("{}: expected {} columns, found {}", path.string(), columns, header.size()));
  }
  std::vector<std::vector<std::string>> rows;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto fields = detail::split_csv_record(lines[i]);
    if (fields.size() != columns) {
      throw Error(ErrorCode::Schema, fmt::format("{}: row {} has {} fields", path.string(), i, fields.size()));
    }
    rows.push_back(std::move(fields));
  }
  if (header_out != nullptr) *header_out = std::move(header);
  return rows;
}

std::vector<DirectionRow> read_direction(const fs::path& path) {
  std::vector<DirectionRow> out;
  for (const auto& r : read_table(path, 4)) {
    out.push_back({to_int(r[0], path.string()), to_double(r[1], path.string()), to_double(r[2], path.string()),
                   to_double(r[3], path.string())});
  }
  return out;
}

LabelReplay read_replay(const fs::path& path) {
  std::vector<std::string> header;
  const auto rows = read_table(path, 8, &header);
  LabelReplay replay;
  for (std::size_t c = 1; c <= 5; ++c) {
    if (header[c].rfind("dot_", 0) != 0) throw Error(ErrorCode::Schema, "replay columns must be dot_<n>");
    replay.positions.push_back(to_int(header[c].substr(4), path.string()));
  }
  for (const auto& r : rows) {
    std::vector<int> labels;
    for (std::size_t c = 1; c <= 5; ++c) labels.push_back(to_int(r[c], path.string()));
    replay.labels.push_back(std::move(labels));
    replay.per_trial_pct.push_back(to_double(r[6], path.string()));
    replay.cumulative_pct.push_back(r[7].empty() ? std::nullopt
                                                 : std::optional<double>(to_double(r[7], path.string())));
  }
  return replay;
}

DeviceLibrary make_library(std::string device_id, std::string circuit_id, GatingEvent gating,
                           const std::vector<double>& p_sd, const std::vector<double>& p_dir, bool synthetic) {
  DeviceLibrary lib;
  lib.device_id = std::move(device_id);
  lib.circuit_id = std::move(circuit_id);
  lib.gating = gating;
  lib.enrollment_trials = 100;
  lib.synthetic = synthetic;
  for (std::size_t i = 0; i < p_sd.size(); ++i) lib.profiles.emplace_back(static_cast<int>(i + 1), p_sd[i], p_dir[i]);
  lib.validate();
  return lib;
}

std::vector<double> direction_probabilities(const std::vector<DirectionRow>& rows) {
  std::vector<double> p;
  for (const auto& r : rows) p.push_back(r.p_rcw_pct / 100.0);
  return p;
}

}  // namespace

PaperDataset PaperDataset::load(const fs::path& data_dir, bool verify_checksums) {
  if (verify_checksums) verify_manifest(data_dir);
  PaperDataset ds;
  ds.root = data_dir;
  ds.circuit_b_direction = read_direction(data_dir / kCircuitB);
  ds.circuit_a_direction = read_direction(data_dir / kCircuitA);

  const auto enrolled_path = (data_dir / kEnrolled).string();
  for (const auto& r : read_table(data_dir / kEnrolled, 7)) {
    ds.enrolled.push_back({to_int(r[0], enrolled_path), to_double(r[1], enrolled_path), to_double(r[2], enrolled_path),
                           parse_state_class(r[3]), to_double(r[4], enrolled_path), to_double(r[5], enrolled_path),
                           parse_state_class(r[6])});
  }

  const auto crp_path = (data_dir / kCrps).string();
  for (const auto& r : read_table(data_dir / kCrps, 12)) {
    ReportedCrp c;
    c.challenge = Challenge::parse(r[0]);
    c.pbits1 = to_int(r[1], crp_path);
    for (std::size_t t = 0; t < 4; ++t) c.ber1_pct[t] = to_double(r[2 + t], crp_path);
    c.pbits2 = to_int(r[6], crp_path);
    for (std::size_t t = 0; t < 4; ++t) c.ber2_pct[t] = to_double(r[7 + t], crp_path);
    c.pfhd = to_double(r[11], crp_path);
    ds.crps.push_back(std::move(c));
  }

  ds.replay = read_replay(data_dir / kReplay);

  if (ds.circuit_a_direction.size() != ds.enrolled.size()) {
    throw Error(ErrorCode::Schema, "circuit-A direction and enrolment tables disagree on dot count");
  }
  return ds;
}

DeviceLibrary PaperDataset::sample1_circuit_a() const {
  std::vector<double> p_sd;
  for (const auto& r : enrolled) p_sd.push_back(r.s1_p_sd_pct / 100.0);
  return make_library("sample1", "A", {-10.0, 60.0}, p_sd, direction_probabilities(circuit_a_direction), false);
}

DeviceLibrary PaperDataset::sample2_circuit_a() const {
  std::vector<double> p_sd;
  for (const auto& r : enrolled) p_sd.push_back(r.s2_p_sd_pct / 100.0);
  // Orientation statistics were not reported for this sample.
  return make_library("sample2", "A", {-10.0, 30.0}, p_sd, std::vector<double>(p_sd.size(), 0.5), false);
}

DeviceLibrary PaperDataset::sample1_circuit_b() const {
  std::vector<double> p_sd(circuit_b_direction.size(), kCircuitBPlaceholderPsd);
  return make_library("sample1", "B", {-10.0, 60.0}, p_sd, direction_probabilities(circuit_b_direction), true);
}

fs::path default_data_dir() { return fs::path(MAGION_DATA_DIR); }

void verify_manifest(const fs::path& data_dir) {
  const auto text = read_file(data_dir / kManifest);
  for (auto line : detail::split_lines(text)) {
    const auto sep = line.find("  ");
    if (sep == std::string_view::npos) throw Error(ErrorCode::Schema, fmt::format("bad manifest line '{}'", line));
    const auto digest = line.substr(0, sep);
    const auto name = line.substr(sep + 2);
    if (sha256_hex(read_file(data_dir / fs::path(std::string(name)))) != digest) {
      throw Error(ErrorCode::Checksum, fmt::format("data file '{}' does not match its recorded checksum", name));
    }
  }
}

std::vector<fs::path> rebuild_dataset_files(const fs::path& data_dir) {
  const auto ds = PaperDataset::load(data_dir, false);
  std::vector<fs::path> written;

  const auto s1a = ds.sample1_circuit_a();
  const auto s2a = ds.sample2_circuit_a();
  const auto s1b = ds.sample1_circuit_b();
  const std::vector<std::pair<std::string, std::pair<const DeviceLibrary*, std::string>>> libs{
      {"libraries/sample1_circuit_a.json",
       {&s1a, "SD/vortex probabilities and majority states as enrolled; direction probabilities measured on the "
              "same circuit."}},
      {"libraries/sample2_circuit_a.json",
       {&s2a, "SD/vortex probabilities as enrolled; direction probabilities not measured, set to 0.5."}},
      {"libraries/sample1_circuit_b.json",
       {&s1b, "Per-dot SD probabilities not measured: uniform 0.087 placeholder matching the aggregate SD "
              "occurrence. Direction probabilities measured."}},
  };
  for (const auto& [rel, entry] : libs) {
    save_library(*entry.first, data_dir / rel, entry.second);
    written.push_back(data_dir / rel);
  }

  // Sample-1 array: circuit B in the top-right corner, circuit A bottom-left, nothing gated yet.
  Device design("sample1", {Circuit::from_library(s1a, 6, {6, 0}), Circuit::from_library(s1b, 6, {0, 4})});
  std::vector<Circuit> ungated;
  for (const auto& c : design.circuits()) ungated.emplace_back(c.id(), c.cells(), c.profiles());
  save_device(Device(design.id(), std::move(ungated)), data_dir / "devices/sample1_design.json");
  written.push_back(data_dir / "devices/sample1_design.json");

  std::vector<std::string> names;
  for (const auto* dir : {"measured", "libraries", "devices"}) {
    for (const auto& entry : fs::directory_iterator(data_dir / dir)) {
      if (entry.is_regular_file()) names.push_back(fs::relative(entry.path(), data_dir).generic_string());
    }
  }
  std::sort(names.begin(), names.end());
  std::string manifest;
  for (const auto& n : names) manifest += fmt::format("{}  {}\n", sha256_hex(read_file(data_dir / n)), n);
  write_file(data_dir / kManifest, manifest);
  written.push_back(data_dir / kManifest);
  return written;
}

}  // namespace magion
