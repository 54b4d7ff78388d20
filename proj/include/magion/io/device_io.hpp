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

#include "magion/core/device.hpp"

namespace magion {

/// Device documents hold the layout, per-dot model probabilities and the
/// gating history of every circuit:
///
///   {"schema": "magion.device", "version": 1, "device_id": "...",
///    "circuits": [{"id": "A", "cells": [[r, c], ...], "p_sd": [...],
///                  "p_dir_rcw": [...], "gating_history": [{"voltage_v": -10,
///                  "duration_min": 60}]}]}
std::string device_to_json(const Device& device);
Device parse_device(std::string_view json_text);

Device load_device(const std::filesystem::path& path);
void save_device(const Device& device, const std::filesystem::path& path);

}  // namespace magion
