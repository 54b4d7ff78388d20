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
#include <string_view>

#include "magion/core/profile.hpp"

namespace magion {

inline constexpr std::string_view kLibrarySchema = "magion.device_library";
inline constexpr int kLibraryVersion = 1;

/// Canonical JSON text of a library: fixed key order, probabilities with six
/// decimals and a trailing "checksum" holding the SHA-256 of the document
/// rendered without that field. Rendering is a pure function of the values,
/// so load followed by save reproduces a canonical file byte for byte.
std::string library_to_json(const DeviceLibrary& library, std::string_view notes = {});

/// Parses and validates a library document. Errors are reported with
/// distinct codes: Schema (malformed or wrong schema/version), Checksum
/// (content does not match the stored digest), InvalidProfile (probability
/// outside [0,1]) and Invariant (p_sd + p_v != 1 beyond 1e-6, inconsistent
/// majority/bit kind, majority tie, positions out of order).
DeviceLibrary parse_library(std::string_view json_text, std::string* notes = nullptr);

DeviceLibrary load_library(const std::filesystem::path& path, std::string* notes = nullptr);
void save_library(const DeviceLibrary& library, const std::filesystem::path& path, std::string_view notes = {});

}  // namespace magion
