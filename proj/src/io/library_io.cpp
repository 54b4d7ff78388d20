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

#include "magion/io/library_io.hpp"

#include <cmath>

#include <fmt/core.h>
#include <json.hpp>

#include "magion/core/error.hpp"
#include "magion/io/checksum.hpp"

namespace magion {

namespace {

using nlohmann::json;

constexpr double kSumTolerance = 1e-6;

std::string json_string(std::string_view s) { return json(std::string(s)).dump(); }

std::string render_body(const DeviceLibrary& lib, std::string_view notes) {
  std::string out = "{\n";
  out += fmt::format("  \"schema\": {},\n", json_string(kLibrarySchema));
  out += fmt::format("  \"version\": {},\n", kLibraryVersion);
  out += fmt::format("  \"device_id\": {},\n", json_string(lib.device_id));
  out += fmt::format("  \"circuit_id\": {},\n", json_string(lib.circuit_id));
  out += fmt::format("  \"gating\": {{\"voltage_v\": {:.6f}, \"duration_min\": {:.6f}}},\n", lib.gating.voltage,
                     lib.gating.duration_min);
  out += fmt::format("  \"enrollment_trials\": {},\n", lib.enrollment_trials);
  out += fmt::format("  \"synthetic\": {},\n", lib.synthetic ? "true" : "false");
  out += fmt::format("  \"notes\": {},\n", json_string(notes));
  out += "  \"profiles\": [";
  for (std::size_t i = 0; i < lib.profiles.size(); ++i) {
    const auto& p = lib.profiles[i];
    out += fmt::format(
        "{}\n    {{\"position\": {}, \"p_sd\": {:.6f}, \"p_v\": {:.6f}, \"p_dir_rcw\": {:.6f}, "
        "\"majority\": \"{}\", \"bit_kind\": \"{}\"}}",
        i == 0 ? "" : ",", p.position(), p.p_sd(), p.p_v(), p.p_dir_rcw(), to_string(p.majority_state()),
        to_string(p.bit_kind()));
  }
  out += "\n  ]";
  return out;
}

template <typename T>
T field(const json& j, const char* key) {
  if (!j.contains(key)) throw Error(ErrorCode::Schema, fmt::format("missing field '{}'", key));
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw Error(ErrorCode::Schema, fmt::format("field '{}': {}", key, e.what()));
  }
}

}  // namespace

std::string library_to_json(const DeviceLibrary& library, std::string_view notes) {
  const std::string body = render_body(library, notes);
  return body + fmt::format(",\n  \"checksum\": \"sha256:{}\"\n}}\n", sha256_hex(body + "\n}\n"));
}

DeviceLibrary parse_library(std::string_view json_text, std::string* notes) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::Schema, fmt::format("not valid JSON: {}", e.what()));
  }
  if (!doc.is_object()) throw Error(ErrorCode::Schema, "library document must be a JSON object");
  if (field<std::string>(doc, "schema") != kLibrarySchema) {
    throw Error(ErrorCode::Schema, "not a magion device library");
  }
  if (const int v = field<int>(doc, "version"); v != kLibraryVersion) {
    throw Error(ErrorCode::Schema, fmt::format("unsupported library version {}", v));
  }

  DeviceLibrary lib;
  lib.device_id = field<std::string>(doc, "device_id");
  lib.circuit_id = field<std::string>(doc, "circuit_id");
  const auto gating = field<json>(doc, "gating");
  lib.gating.voltage = field<double>(gating, "voltage_v");
  lib.gating.duration_min = field<double>(gating, "duration_min");
  lib.enrollment_trials = field<int>(doc, "enrollment_trials");
  lib.synthetic = doc.value("synthetic", false);
  const std::string doc_notes = doc.value("notes", std::string{});

  const auto profiles = field<json>(doc, "profiles");
  if (!profiles.is_array()) throw Error(ErrorCode::Schema, "'profiles' must be an array");
  for (const auto& p : profiles) {
    const int position = field<int>(p, "position");
    const double p_sd = field<double>(p, "p_sd");
    const double p_v = field<double>(p, "p_v");
    const double p_dir = field<double>(p, "p_dir_rcw");
    DotProfile profile(position, p_sd, p_dir);  // range checks
    if (!(p_v >= 0.0 && p_v <= 1.0)) {
      throw Error(ErrorCode::InvalidProfile, fmt::format("dot {}: p_v={} outside [0,1]", position, p_v));
    }
    if (std::abs(p_sd + p_v - 1.0) > kSumTolerance) {
      throw Error(ErrorCode::Invariant, fmt::format("dot {}: p_sd + p_v = {}", position, p_sd + p_v));
    }
    if (p.contains("majority") &&
        parse_state_class(field<std::string>(p, "majority")) != profile.majority_state() && !profile.has_majority_tie()) {
      throw Error(ErrorCode::Invariant, fmt::format("dot {}: stored majority contradicts p_sd", position));
    }
    if (p.contains("bit_kind") && field<std::string>(p, "bit_kind") != to_string(profile.bit_kind())) {
      throw Error(ErrorCode::Invariant, fmt::format("dot {}: stored bit kind contradicts p_sd", position));
    }
    lib.profiles.push_back(profile);
  }
  lib.validate();

  if (doc.contains("checksum")) {
    const auto stored = field<std::string>(doc, "checksum");
    const auto expected = "sha256:" + sha256_hex(render_body(lib, doc_notes) + "\n}\n");
    if (stored != expected) {
      throw Error(ErrorCode::Checksum, fmt::format("library '{}' content does not match its checksum", lib.device_id));
    }
  }
  if (notes != nullptr) *notes = doc_notes;
  return lib;
}

DeviceLibrary load_library(const std::filesystem::path& path, std::string* notes) {
  return parse_library(read_file(path), notes);
}

void save_library(const DeviceLibrary& library, const std::filesystem::path& path, std::string_view notes) {
  write_file(path, library_to_json(library, notes));
}

}  // namespace magion
