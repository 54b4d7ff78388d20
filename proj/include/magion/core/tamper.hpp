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

#include <map>
#include <string>
#include <vector>

#include "magion/core/device.hpp"

namespace magion {

struct TamperReport {
  std::vector<std::string> violated_circuits;

  bool clean() const noexcept { return violated_circuits.empty(); }
};

/// Compares each circuit's activation with the expected design. Circuits
/// missing from `expected` are expected to be off; expected-on circuits
/// that do not exist on the device are reported as well.
TamperReport tamper_check(const Device& device, const std::map<std::string, bool>& expected);

}  // namespace magion
