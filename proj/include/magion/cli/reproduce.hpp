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

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "magion/io/dataset.hpp"

namespace magion::cli {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct ReproduceReport {
  std::vector<CheckResult> checks;
  std::vector<std::filesystem::path> artifacts;

  bool all_pass() const;
};

/// Regenerates every table, report and plot series from the shipped data
/// into `out_dir` and checks them against the published values. Output
/// files depend only on the dataset and the seed.
ReproduceReport reproduce_paper(const PaperDataset& dataset, const std::filesystem::path& out_dir, std::uint64_t seed);

}  // namespace magion::cli
