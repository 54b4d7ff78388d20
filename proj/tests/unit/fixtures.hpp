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
#include <string>
#include <vector>

#include "magion/core/profile.hpp"
#include "magion/io/dataset.hpp"
#include "magion/io/library_io.hpp"

namespace magion::testing {

inline std::filesystem::path data_dir() { return std::filesystem::path(MAGION_DATA_DIR); }

inline DeviceLibrary shipped(const std::string& file) { return load_library(data_dir() / "libraries" / file); }

inline const PaperDataset& dataset() {
  static const PaperDataset ds = PaperDataset::load(data_dir());
  return ds;
}

inline DeviceLibrary make_library(const std::vector<double>& p_sd, double p_dir = 0.5, std::string id = "lib") {
  DeviceLibrary lib;
  lib.device_id = std::move(id);
  lib.circuit_id = "A";
  lib.gating = {-10.0, 60.0};
  for (std::size_t i = 0; i < p_sd.size(); ++i) lib.profiles.emplace_back(static_cast<int>(i + 1), p_sd[i], p_dir);
  return lib;
}

// Fresh scratch directory under the build tree.
inline std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("magion_test_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace magion::testing
