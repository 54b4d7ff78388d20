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
#include <iosfwd>
#include <string>
#include <vector>

namespace magion::cli {

enum ExitCode : int {
  kSuccess = 0,
  kUsage = 1,
  kDataError = 2,
  kTamperDetected = 3,
};

/// Output directory override honoured when no --out is given.
inline constexpr const char* kOutputDirEnv = "MAGION_OUTPUT_DIR";

struct RunConfig {
  std::uint64_t seed = 20250101;
  std::vector<std::filesystem::path> library_paths;
  std::filesystem::path output_dir = ".";
  std::string format = "json";
};

/// `--out` wins, then $MAGION_OUTPUT_DIR, then `fallback`.
std::filesystem::path resolve_output_dir(const std::string& flag_value, const std::filesystem::path& fallback);

/// Shipped library shorthands ("sample1-a", "sample2-a", "sample1-b") or a path.
std::filesystem::path resolve_library(const std::string& name_or_path, const std::filesystem::path& data_dir);

/// Parses `args` (without the program name) and runs one subcommand.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace magion::cli
