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
#include <string_view>
#include <vector>

#include "magion/core/state.hpp"

namespace magion {

/// `trial,dot_1,...,dot_N` followed by one row of state codes per trace
/// (0=OFF, 1=SDR, 2=SDL, 3=VCW, 4=VCCW).
std::string traces_to_csv(std::span<const DegaussTrace> traces);
std::vector<DegaussTrace> parse_traces_csv(std::string_view text);

void save_traces(std::span<const DegaussTrace> traces, const std::filesystem::path& path);
std::vector<DegaussTrace> load_traces(const std::filesystem::path& path);

}  // namespace magion
