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

#include "magion/io/device_io.hpp"

#include <fmt/core.h>
#include <json.hpp>

#include "magion/core/error.hpp"
#include "magion/io/checksum.hpp"

namespace magion {

using nlohmann::json;

std::string device_to_json(const Device& device) {
  json doc;
  doc["schema"] = "magion.device";
  doc["version"] = 1;
  doc["device_id"] = device.id();
  doc["circuits"] = json::array();
  for (const auto& c : device.circuits()) {
    json jc;
    jc["id"] = c.id();
    jc["cells"] = json::array();
    jc["p_sd"] = json::array();
    jc["p_dir_rcw"] = json::array();
    for (std::size_t i = 0; i < c.size(); ++i) {
      jc["cells"].push_back({c.cells()[i].row, c.cells()[i].col});
      jc["p_sd"].push_back(c.profiles()[i].p_sd());
      jc["p_dir_rcw"].push_back(c.profiles()[i].p_dir_rcw());
    }
    jc["gating_history"] = json::array();
    for (const auto& e : c.gating_history()) {
      jc["gating_history"].push_back({{"voltage_v", e.voltage}, {"duration_min", e.duration_min}});
    }
    doc["circuits"].push_back(std::move(jc));
  }
  return doc.dump(2) + "\n";
}

Device parse_device(std::string_view json_text) {
  try {
    const json doc = json::parse(json_text);
    if (doc.at("schema").get<std::string>() != "magion.device") {
      throw Error(ErrorCode::Schema, "not a magion device document");
    }
    if (doc.at("version").get<int>() != 1) throw Error(ErrorCode::Schema, "unsupported device version");
    std::vector<Circuit> circuits;
    for (const auto& jc : doc.at("circuits")) {
      std::vector<GridCell> cells;
      for (const auto& cell : jc.at("cells")) cells.push_back({cell.at(0).get<int>(), cell.at(1).get<int>()});
      const auto p_sd = jc.at("p_sd").get<std::vector<double>>();
      const auto p_dir = jc.value("p_dir_rcw", std::vector<double>(cells.size(), 0.5));
      if (p_sd.size() != cells.size() || p_dir.size() != cells.size()) {
        throw Error(ErrorCode::Schema, "circuit probability arrays must match its cell count");
      }
      std::vector<DotProfile> profiles;
      for (std::size_t i = 0; i < cells.size(); ++i) {
        profiles.emplace_back(static_cast<int>(i + 1), p_sd[i], p_dir[i]);
      }
      std::vector<GatingEvent> history;
      for (const auto& e : jc.value("gating_history", json::array())) {
        history.push_back({e.at("voltage_v").get<double>(), e.at("duration_min").get<double>()});
      }
      circuits.emplace_back(jc.at("id").get<std::string>(), std::move(cells), std::move(profiles), std::move(history));
    }
    return Device(doc.at("device_id").get<std::string>(), std::move(circuits));
  } catch (const json::exception& e) {
    throw Error(ErrorCode::Schema, fmt::format("malformed device document: {}", e.what()));
  }
}

Device load_device(const std::filesystem::path& path) { return parse_device(read_file(path)); }

void save_device(const Device& device, const std::filesystem::path& path) {
  write_file(path, device_to_json(device));
}

}  // namespace magion
